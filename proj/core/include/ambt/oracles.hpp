#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "ambt/graph.hpp"
#include "ambt/matching.hpp"
#include "ambt/weighted_matching.hpp"
#include "ambt/x3c.hpp"

// Exhaustive solvers for small instances. They work on a dense bitmask copy
// of the graph, so every graph oracle rejects loops and parallel edges
// (std::invalid_argument) and graphs above the configured vertex limit
// (LimitExceeded).

namespace ambt {

struct OracleLimits {
    std::size_t max_vertices = 14;
    std::size_t x3c_universe = 20;
    std::size_t x3c_sets = 30;
};

/// Hard ceiling of the bitmask representation.
inline constexpr std::size_t kOracleVertexCeiling = 60;

enum class Problem { AM, IM, URM, MM, IS, FVS, X3C, MWM };

std::string_view to_string(Problem p);

struct OracleReport {
    Problem problem = Problem::MM;
    std::int64_t optimum = 0;
    Matching matching;              // AM, IM, URM, MM, MWM
    std::vector<VertexId> vertices; // IS, FVS (ascending)
    std::vector<std::size_t> sets;  // X3C: indices into the input list
};

OracleReport max_restricted_matching(const MultiGraph& g, MatchingKind kind, const OracleLimits& limits = {});

/// Calls visit once for every matching of g in class `kind`, including the
/// empty one. Enumeration order is unspecified.
void for_each_restricted_matching(const MultiGraph& g, MatchingKind kind, const std::function<void(const Matching&)>& visit,
                                  const OracleLimits& limits = {});

/// All maximum-size matchings of class `kind`.
std::vector<Matching> all_maximum_restricted_matchings(const MultiGraph& g, MatchingKind kind,
                                                       const OracleLimits& limits = {});

OracleReport max_independent_set(const MultiGraph& g, const OracleLimits& limits = {});

OracleReport min_fvs(const MultiGraph& g, const OracleLimits& limits = {});

/// Every feedback vertex set with at most size_cap vertices, each ascending.
std::vector<std::vector<VertexId>> all_fvs(const MultiGraph& g, std::size_t size_cap, const OracleLimits& limits = {});

OracleReport max_matching(const MultiGraph& g, const OracleLimits& limits = {});

/// Maximum total weight over all matchings.
OracleReport brute_force_mwm(const WeightedInstance& inst, const OracleLimits& limits = {});

/// Indices of an exact cover of [n] drawn from sets, ascending, or none.
/// Throws std::invalid_argument if n is not a multiple of 3 or a triple is
/// malformed, LimitExceeded above the configured sizes.
std::optional<std::vector<std::size_t>> solve_x3c(std::uint32_t n, const std::vector<Triple>& sets,
                                                  const OracleLimits& limits = {});

}  // namespace ambt
