#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ambt/graph.hpp"
#include "ambt/matching.hpp"
#include "ambt/random.hpp"
#include "ambt/weighted_matching.hpp"

namespace ambt {

struct Replacement {
    VertexId virtual_vertex = 0;
    std::vector<VertexId> path;  // may contain earlier virtual vertices
};

/// Record of every degree-2 path contraction, in the order performed.
class ReplacementLog {
public:
    /// Throws std::invalid_argument if vp was already recorded.
    void record(VertexId vp, std::vector<VertexId> path);
    bool contains(VertexId vp) const;
    /// Throws std::out_of_range if vp was never recorded.
    const std::vector<VertexId>& path_of(VertexId vp) const;

    const std::vector<Replacement>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::vector<Replacement> entries_;
};

struct VfvsOutcome {
    enum class Verdict { Found, No };

    Verdict verdict = Verdict::Found;
    std::vector<VertexId> picked;  // X-hat, in pick order
    std::vector<VertexId> pruned;  // Z, in deletion order
    ReplacementLog log;

    bool found() const { return verdict == Verdict::Found; }
    bool is_virtual(VertexId v) const { return log.contains(v); }
    /// Members of `picked` that are virtual vertices.
    std::vector<VertexId> virtual_picked() const;
};

struct AmbtAnswer {
    bool yes = false;
    Matching witness;
};

/// One run of the virtual feedback-vertex-set sampler on a working copy of
/// g with budget k. Throws std::invalid_argument for k < 0.
VfvsOutcome sample_virtual_fvs(const MultiGraph& g, std::int64_t k, Rng& rng);

/// Original vertices obtained by unfolding vp through the log, ascending.
/// Throws std::out_of_range if vp is not a key of the log.
std::vector<VertexId> safe_set(VertexId vp, const ReplacementLog& log);

/// Weighted graph whose heavy matchings certify an acyclic matching of g
/// avoiding the sampled vertices. g must be the original input graph.
/// Throws std::invalid_argument if the outcome is a No.
WeightedInstance build_weighted_instance(const MultiGraph& g, const VfvsOutcome& out, std::size_t ell);

/// Single randomized attempt to find an acyclic matching of size >= ell in
/// a simple graph g. Throws std::invalid_argument if g is not simple.
AmbtAnswer solve_once(const MultiGraph& g, std::size_t ell, Rng& rng);

struct SolveOptions {
    std::uint64_t seed = 0;
    /// Exact number of trials; when unset the budget is min(10^k, cap).
    std::optional<std::int64_t> trials;
    std::int64_t cap = 1'000'000;
    /// Worker threads; results do not depend on this value.
    unsigned threads = 1;
};

struct SolveReport {
    AmbtAnswer answer;
    std::uint64_t budget = 0;      // trials allowed
    std::uint64_t trials_run = 0;  // trials up to and including the first yes
    bool capped = false;           // 10^k exceeded the cap
    std::int64_t k = 0;            // n - 2*ell
};

/// Number of trials used when no override is given: min(10^k, cap), and
/// whether the cap was hit. Non-positive k gives one trial.
std::pair<std::uint64_t, bool> default_trial_budget(std::int64_t k, std::int64_t cap);

/// Repeats solve_once with trial i drawing from Rng::for_stream(seed, i) and
/// returns the lowest-indexed yes. Throws std::invalid_argument for a trials
/// override below 1 or a cap below 1.
SolveReport solve(const MultiGraph& g, std::size_t ell, const SolveOptions& options = {});

}  // namespace ambt
