#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ambt/random.hpp"

namespace ambt {

/// Three distinct elements of [n], 1-based, stored ascending.
using Triple = std::array<std::uint32_t, 3>;

/// Sorts the elements; throws std::invalid_argument on a repeated element.
Triple make_triple(std::uint32_t a, std::uint32_t b, std::uint32_t c);

struct X3CInstance {
    std::vector<Triple> sets;
};

/// t Exact-3-Cover instances over the common universe [universe].
struct X3CFamily {
    std::uint32_t universe = 0;
    std::vector<X3CInstance> instances;

    /// Throws std::invalid_argument unless: universe is a positive multiple
    /// of 3, there is at least one instance, every triple is sorted with
    /// distinct elements in range, no instance repeats a triple and no two
    /// instances hold the same collection.
    void validate() const;

    /// Distinct triples over all instances, sorted lexicographically; this
    /// fixes the gadget order s_1..s_|C| of the composed graph.
    std::vector<Triple> union_sets() const;
};

/// Random family: t pairwise different instances of m distinct triples each.
/// With plant set, instance 0 contains a random exact cover. Throws
/// std::invalid_argument when the parameters cannot be met.
X3CFamily random_x3c_family(std::uint32_t universe, std::size_t t, std::size_t m, bool plant, Rng& rng);

}  // namespace ambt
