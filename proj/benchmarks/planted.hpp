#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ambt/graph.hpp"
#include "ambt/matching.hpp"
#include "ambt/random.hpp"

namespace ambt::bench {

struct PlantedInstance {
    MultiGraph graph;
    std::size_t ell = 0;
    Matching planted;  // acyclic, size ell
};

/// Random graph on n vertices with a known acyclic matching of size
/// (n - k) / 2. For k >= 2 the matched pairs plus one sacrificial pair span
/// a random tree and `chords` extra edges leave that pair, so the graph has
/// cycles but the planted matching stays acyclic. Vertex ids are shuffled.
inline PlantedInstance planted_yes_instance(std::size_t n, std::size_t k, std::size_t chords, Rng& rng) {
    if (k > n || (n - k) % 2 != 0) throw std::invalid_argument("planted_yes_instance: n - k must be even and non-negative");
    const std::size_t ell = (n - k) / 2;
    const std::size_t pairs = ell + (k >= 2 ? 1 : 0);

    std::vector<VertexId> label(n);
    std::iota(label.begin(), label.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);

    PlantedInstance out;
    out.ell = ell;
    out.graph = MultiGraph(n);
    auto add = [&](std::size_t a, std::size_t b) {
        if (a != b && !out.graph.adjacent(label[a], label[b])) out.graph.add_edge(label[a], label[b]);
    };
    // Pair i is {2i, 2i+1}; pair `pairs - 1` is sacrificed when k >= 2.
    for (std::size_t i = 0; i < pairs; ++i) {
        add(2 * i, 2 * i + 1);
        if (i > 0) add(2 * rng.below(i) + rng.below(2), 2 * i + rng.below(2));
    }
    for (std::size_t v = 2 * pairs; v < n; ++v) add(v, rng.below(v));
    for (std::size_t i = 0; i < ell; ++i) out.planted.add(label[2 * i], label[2 * i + 1]);
    if (k >= 2) {
        const std::size_t s = 2 * (pairs - 1);
        for (std::size_t c = 0; c < chords; ++c) add(s + rng.below(2), rng.below(n));
    }
    return out;
}

}  // namespace ambt::bench
