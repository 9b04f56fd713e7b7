#include "ambt/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ambt/errors.hpp"

namespace ambt {

namespace {

VertexPair normalized(VertexId u, VertexId v) { return u < v ? VertexPair{u, v} : VertexPair{v, u}; }

void require_matching(const MultiGraph& g, const Matching& m, const char* who) {
    if (!is_matching(g, m)) throw std::invalid_argument(std::string(who) + ": not a matching of the graph");
}

/// Edmonds search for an augmenting path between the only two exposed
/// vertices of a graph whose other vertices are perfectly matched.
class AugmentingPathSearch {
public:
    AugmentingPathSearch(std::vector<std::vector<int>> adj, std::vector<int> mate)
        : adj_(std::move(adj)), mate_(std::move(mate)), n_(static_cast<int>(adj_.size())) {}

    /// True iff an alternating path joins root to target, ignoring the
    /// edge {skip_a, skip_b}.
    bool connects(int root, int target, int skip_a, int skip_b) {
        skip_a_ = skip_a;
        skip_b_ = skip_b;
        return find_path(root) == target;
    }

private:
    bool skipped(int a, int b) const { return (a == skip_a_ && b == skip_b_) || (a == skip_b_ && b == skip_a_); }

    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_path(int root) {
        used_.assign(n_, 0);
        parent_.assign(n_, -1);
        base_.resize(n_);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int to : adj_[v]) {
                if (skipped(v, to)) continue;
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    int cur = lca(v, to);
                    in_blossom_.assign(n_, 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[base_[i]]) continue;
                        base_[i] = cur;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue.push_back(i);
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    used_[mate_[to]] = 1;
                    queue.push_back(mate_[to]);
                }
            }
        }
        return -1;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<int> mate_;
    int n_;
    int skip_a_ = -1, skip_b_ = -1;
    std::vector<char> used_, in_blossom_;
    std::vector<int> parent_, base_;
};

}  // namespace

Matching::Matching(std::initializer_list<VertexPair> pairs) {
    for (auto [u, v] : pairs) add(u, v);
}

Matching::Matching(std::span<const VertexPair> pairs) {
    for (auto [u, v] : pairs) add(u, v);
}

void Matching::add(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("Matching::add: a pair needs two distinct vertices");
    VertexPair p = normalized(u, v);
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
    if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
}

bool Matching::contains(VertexId u, VertexId v) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), normalized(u, v));
}

std::vector<VertexId> Matching::saturated() const {
    std::vector<VertexId> out;
    out.reserve(2 * pairs_.size());
    for (auto [u, v] : pairs_) {
        out.push_back(u);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view to_string(MatchingKind kind) {
    switch (kind) {
        case MatchingKind::Acyclic: return "acyclic";
        case MatchingKind::Induced: return "induced";
        case MatchingKind::UniquelyRestricted: return "uniquely-restricted";
    }
    return "unknown";
}

bool is_matching(const MultiGraph& g, const Matching& m) {
    std::vector<char> used(g.vertex_id_bound(), 0);
    for (auto [u, v] : m.pairs()) {
        if (!g.has_vertex(u) || !g.has_vertex(v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
        if (!g.adjacent(u, v)) return false;
    }
    return true;
}

bool is_acyclic_matching(const MultiGraph& g, const Matching& m) {
    require_matching(g, m, "is_acyclic_matching");
    const auto vm = m.saturated();
    return is_forest(g, vm);
}

bool is_induced_matching(const MultiGraph& g, const Matching& m) {
    require_matching(g, m, "is_induced_matching");
    std::vector<char> in(g.vertex_id_bound(), 0);
    for (VertexId v : m.saturated()) in[v] = 1;
    std::size_t induced_edges = 0;
    for (VertexId v : m.saturated())
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.edge(e).other(v);
            if (w == v) return false;
            if (in[w] && v < w) ++induced_edges;
        }
    return induced_edges == m.size();
}

bool has_alternating_cycle(const MultiGraph& g, const Matching& m) {
    require_matching(g, m, "has_alternating_cycle");
    const auto vm = m.saturated();
    const int n = static_cast<int>(vm.size());
    std::vector<int> index(g.vertex_id_bound(), -1);
    for (int i = 0; i < n; ++i) index[vm[i]] = i;

    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (VertexId w : g.neighbors(vm[i]))
            if (index[w] >= 0 && index[w] != i) adj[i].push_back(index[w]);
    std::vector<int> mate(n, -1);
    for (auto [u, v] : m.pairs()) {
        mate[index[u]] = index[v];
        mate[index[v]] = index[u];
    }

    // An alternating cycle exists iff G[V_M] has a second perfect matching,
    // i.e. iff for some matched edge uv there is an alternating u-v path
    // avoiding uv once uv is unmatched.
    for (auto [u, v] : m.pairs()) {
        const int a = index[u], b = index[v];
        // A parallel copy of uv is already an alternating 2-cycle.
        std::size_t copies = 0;
        for (EdgeId e : g.incident(u)) copies += g.edge(e).other(u) == v ? 1 : 0;
        if (copies > 1) return true;
        std::vector<int> reduced = mate;
        reduced[a] = reduced[b] = -1;
        AugmentingPathSearch search(adj, std::move(reduced));
        if (search.connects(a, b, a, b)) return true;
    }
    return false;
}

bool is_ur_matching(const MultiGraph& g, const Matching& m) { return !has_alternating_cycle(g, m); }

bool is_restricted_matching(const MultiGraph& g, const Matching& m, MatchingKind kind) {
    switch (kind) {
        case MatchingKind::Acyclic: return is_acyclic_matching(g, m);
        case MatchingKind::Induced: return is_induced_matching(g, m);
        case MatchingKind::UniquelyRestricted: return is_ur_matching(g, m);
    }
    return false;
}

bool is_independent_set(const MultiGraph& g, std::span<const VertexId> vertices) {
    std::vector<char> in(g.vertex_id_bound(), 0);
    for (VertexId v : vertices) {
        if (!g.has_vertex(v)) return false;
        in[v] = 1;
    }
    for (VertexId v : vertices)
        for (EdgeId e : g.incident(v))
            if (in[g.edge(e).other(v)]) return false;
    return true;
}

IndependentSetCert acyclic_to_independent(const MultiGraph& g, const Matching& m) {
    if (!is_acyclic_matching(g, m)) throw std::invalid_argument("acyclic_to_independent: matching is not acyclic");
    const auto vm = m.saturated();
    Bipartition parts = bipartition_forest(g, vm);
    return IndependentSetCert{std::move(parts.first), IndependentSetCert::Source::Acyclic};
}

IndependentSetCert ur_to_independent(const MultiGraph& g, const Matching& m) {
    if (!is_ur_matching(g, m)) throw std::invalid_argument("ur_to_independent: matching is not uniquely restricted");
    const auto vm = m.saturated();
    MultiGraph h = induced_subgraph(g, vm);
    std::vector<VertexId> picked;

    for (;;) {
        const auto comps = connected_components(h);
        auto big = std::find_if(comps.begin(), comps.end(), [](const auto& c) { return c.size() >= 4; });
        if (big == comps.end()) break;

        std::vector<char> in_big(h.vertex_id_bound(), 0);
        for (VertexId v : *big) in_big[v] = 1;
        std::optional<EdgeId> chosen;
        for (EdgeId e : bridges(h)) {
            const Edge& ed = h.edge(e);
            if (in_big[ed.a] && m.contains(ed.a, ed.b)) {
                chosen = e;
                break;
            }
        }
        // A component with a unique perfect matching always has a matched bridge.
        if (!chosen) throw InternalError("ur_to_independent: no matched bridge in a component of size >= 4");

        const Edge ed = h.edge(*chosen);
        if (h.degree(ed.a) == 1) {
            picked.push_back(ed.a);
        } else if (h.degree(ed.b) == 1) {
            picked.push_back(ed.b);
        }
        h.remove_vertex(ed.a);
        h.remove_vertex(ed.b);
    }
    for (const auto& comp : connected_components(h)) picked.push_back(comp.front());
    std::sort(picked.begin(), picked.end());
    return IndependentSetCert{std::move(picked), IndependentSetCert::Source::UniquelyRestricted};
}

bool check_distance_property(const MultiGraph& g, const Matching& m, unsigned radius) {
    constexpr unsigned unreached = std::numeric_limits<unsigned>::max();
    std::vector<unsigned> dist(g.vertex_id_bound(), unreached);
    std::vector<VertexId> queue;
    for (VertexId v : m.saturated()) {
        if (!g.has_vertex(v)) return false;
        dist[v] = 0;
        queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        if (dist[v] >= radius) continue;
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.edge(e).other(v);
            if (dist[w] == unreached) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    for (VertexId v : g.vertices())
        if (dist[v] > radius) return false;
    return true;
}

}  // namespace ambt
