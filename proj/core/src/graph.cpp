#include "ambt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ambt {

namespace {

std::string vertex_name(VertexId v) { return "vertex " + std::to_string(v); }

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// False when a and b were already joined.
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
};

std::vector<char> membership(const MultiGraph& g, std::span<const VertexId> subset) {
    std::vector<char> in(g.vertex_id_bound(), 0);
    for (VertexId v : subset) {
        if (!g.has_vertex(v)) throw std::out_of_range("unknown " + vertex_name(v));
        in[v] = 1;
    }
    return in;
}

bool eligible_for_path(const MultiGraph& g, VertexId v) { return g.degree(v) == 2 && !g.has_loop(v); }

}  // namespace

MultiGraph::MultiGraph(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) add_vertex();
}

VertexId MultiGraph::add_vertex(bool is_virtual) {
    VertexSlot s;
    s.alive = true;
    s.is_virtual = is_virtual;
    vertices_.push_back(std::move(s));
    ++vertex_count_;
    return static_cast<VertexId>(vertices_.size() - 1);
}

EdgeId MultiGraph::add_edge(VertexId a, VertexId b) {
    if (!has_vertex(a)) throw std::out_of_range("add_edge: unknown " + vertex_name(a));
    if (!has_vertex(b)) throw std::out_of_range("add_edge: unknown " + vertex_name(b));
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(EdgeSlot{Edge{id, a, b}, true});
    vertices_[a].incident.push_back(id);
    vertices_[b].incident.push_back(id);
    ++edge_count_;
    return id;
}

void MultiGraph::remove_edge(EdgeId e) {
    if (!has_edge(e)) throw std::out_of_range("remove_edge: unknown edge " + std::to_string(e));
    auto& slot = edges_[e];
    slot.alive = false;
    for (VertexId v : {slot.edge.a, slot.edge.b}) {
        auto& inc = vertices_[v].incident;
        inc.erase(std::remove(inc.begin(), inc.end(), e), inc.end());
    }
    --edge_count_;
}

void MultiGraph::remove_vertex(VertexId v) {
    if (!has_vertex(v)) throw std::out_of_range("remove_vertex: unknown " + vertex_name(v));
    while (!vertices_[v].incident.empty()) remove_edge(vertices_[v].incident.back());
    vertices_[v].alive = false;
    --vertex_count_;
}

bool MultiGraph::has_vertex(VertexId v) const { return v < vertices_.size() && vertices_[v].alive; }

bool MultiGraph::has_edge(EdgeId e) const { return e < edges_.size() && edges_[e].alive; }

bool MultiGraph::is_virtual(VertexId v) const { return slot(v).is_virtual; }

const MultiGraph::VertexSlot& MultiGraph::slot(VertexId v) const {
    if (!has_vertex(v)) throw std::out_of_range("unknown " + vertex_name(v));
    return vertices_[v];
}

std::vector<VertexId> MultiGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(vertex_count_);
    for (VertexId v = 0; v < vertices_.size(); ++v)
        if (vertices_[v].alive) out.push_back(v);
    return out;
}

std::vector<EdgeId> MultiGraph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(edge_count_);
    for (EdgeId e = 0; e < edges_.size(); ++e)
        if (edges_[e].alive) out.push_back(e);
    return out;
}

const Edge& MultiGraph::edge(EdgeId e) const {
    if (!has_edge(e)) throw std::out_of_range("unknown edge " + std::to_string(e));
    return edges_[e].edge;
}

std::span<const EdgeId> MultiGraph::incident(VertexId v) const { return slot(v).incident; }

std::size_t MultiGraph::degree(VertexId v) const { return slot(v).incident.size(); }

std::vector<VertexId> MultiGraph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (EdgeId e : slot(v).incident) out.push_back(edges_[e].edge.other(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<EdgeId> MultiGraph::find_edge(VertexId a, VertexId b) const {
    const auto& sa = slot(a);
    const auto& sb = slot(b);
    const auto& shorter = sa.incident.size() <= sb.incident.size() ? sa.incident : sb.incident;
    std::optional<EdgeId> best;
    for (EdgeId e : shorter) {
        const Edge& ed = edges_[e].edge;
        if ((ed.a == a && ed.b == b) || (ed.a == b && ed.b == a))
            if (!best || e < *best) best = e;
    }
    return best;
}

bool MultiGraph::has_loop(VertexId v) const {
    for (EdgeId e : slot(v).incident)
        if (edges_[e].edge.is_loop()) return true;
    return false;
}

bool MultiGraph::is_simple() const {
    std::vector<VertexId> seen(vertices_.size(), 0);
    VertexId stamp = 0;
    for (VertexId v = 0; v < vertices_.size(); ++v) {
        if (!vertices_[v].alive) continue;
        ++stamp;
        for (EdgeId e : vertices_[v].incident) {
            VertexId w = edges_[e].edge.other(v);
            if (w == v) return false;
            if (seen[w] == stamp) return false;
            seen[w] = stamp;
        }
    }
    return true;
}

std::size_t degree(const MultiGraph& g, VertexId v) { return g.degree(v); }

bool has_cycle(const MultiGraph& g) {
    DisjointSets sets(g.vertex_id_bound());
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.edge(e);
        if (!sets.unite(ed.a, ed.b)) return true;
    }
    return false;
}

bool is_forest(const MultiGraph& g, std::span<const VertexId> subset) {
    auto in = membership(g, subset);
    DisjointSets sets(g.vertex_id_bound());
    for (VertexId v : subset) {
        if (in[v] == 2) continue;  // duplicate entry
        in[v] = 2;
        for (EdgeId e : g.incident(v)) {
            const Edge& ed = g.edge(e);
            // Visit each edge once, from its lower endpoint; loops are cycles.
            if (ed.is_loop()) return false;
            VertexId w = ed.other(v);
            if (!in[w] || w < v) continue;
            if (!sets.unite(v, w)) return false;
        }
    }
    return true;
}

std::vector<std::vector<VertexId>> connected_components(const MultiGraph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<char> seen(g.vertex_id_bound(), 0);
    for (VertexId root : g.vertices()) {
        if (seen[root]) continue;
        std::vector<VertexId> comp{root};
        seen[root] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (EdgeId e : g.incident(comp[i])) {
                VertexId w = g.edge(e).other(comp[i]);
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<EdgeId> bridges(const MultiGraph& g) {
    constexpr std::uint32_t unvisited = UINT32_MAX;
    constexpr EdgeId no_edge = UINT32_MAX;
    std::vector<std::uint32_t> disc(g.vertex_id_bound(), unvisited);
    std::vector<std::uint32_t> low(g.vertex_id_bound(), 0);
    std::vector<EdgeId> out;

    struct Frame {
        VertexId v;
        EdgeId via;
        std::size_t next;
    };
    std::uint32_t timer = 0;
    std::vector<Frame> stack;
    for (VertexId root : g.vertices()) {
        if (disc[root] != unvisited) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, no_edge, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                const Edge& ed = g.edge(e);
                if (e == f.via || ed.is_loop()) continue;
                VertexId w = ed.other(f.v);
                if (disc[w] == unvisited) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (done.via == no_edge) continue;
            VertexId parent = stack.back().v;
            low[parent] = std::min(low[parent], low[done.v]);
            if (low[done.v] > disc[parent]) out.push_back(done.via);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Bipartition bipartition_forest(const MultiGraph& g, std::span<const VertexId> subset) {
    if (!is_forest(g, subset))
        throw std::invalid_argument("bipartition_forest: induced subgraph has a cycle");
    const auto in = membership(g, subset);
    std::vector<int> color(g.vertex_id_bound(), -1);
    std::vector<VertexId> order(subset.begin(), subset.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());

    Bipartition out;
    std::vector<VertexId> queue;
    for (VertexId root : order) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.assign(1, root);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            VertexId v = queue[i];
            (color[v] == 0 ? out.first : out.second).push_back(v);
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.edge(e).other(v);
                if (!in[w] || color[w] != -1) continue;
                color[w] = 1 - color[v];
                queue.push_back(w);
            }
        }
    }
    std::sort(out.first.begin(), out.first.end());
    std::sort(out.second.begin(), out.second.end());
    return out;
}

std::optional<VertexPath> find_maximal_deg2_path(const MultiGraph& g) {
    std::vector<char> seen(g.vertex_id_bound(), 0);
    for (VertexId start : g.vertices()) {
        if (seen[start] || !eligible_for_path(g, start)) continue;

        std::vector<VertexId> comp{start};
        seen[start] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (EdgeId e : g.incident(comp[i])) {
                VertexId w = g.edge(e).other(comp[i]);
                if (!seen[w] && eligible_for_path(g, w)) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        if (comp.size() < 2) continue;

        std::vector<char> in(g.vertex_id_bound(), 0);
        for (VertexId v : comp) in[v] = 1;
        auto internal_degree = [&](VertexId v) {
            std::size_t d = 0;
            for (EdgeId e : g.incident(v)) d += in[g.edge(e).other(v)] ? 1 : 0;
            return d;
        };

        VertexPath path;
        path.is_cycle = std::all_of(comp.begin(), comp.end(), [&](VertexId v) { return internal_degree(v) == 2; });

        VertexId first = UINT32_MAX;
        EdgeId came_by = UINT32_MAX;
        if (path.is_cycle) {
            first = *std::min_element(comp.begin(), comp.end());
            // Leave the start towards its smaller neighbor.
            auto inc = g.incident(first);
            EdgeId e0 = inc[0], e1 = inc[1];
            VertexId w0 = g.edge(e0).other(first), w1 = g.edge(e1).other(first);
            came_by = (w0 < w1 || (w0 == w1 && e0 < e1)) ? e1 : e0;
        } else {
            for (VertexId v : comp)
                if (internal_degree(v) == 1) first = std::min(first, v);
        }

        VertexId cur = first;
        for (;;) {
            path.vertices.push_back(cur);
            EdgeId step = UINT32_MAX;
            for (EdgeId e : g.incident(cur)) {
                if (e == came_by) continue;
                if (in[g.edge(e).other(cur)]) {
                    step = e;
                    break;
                }
            }
            if (step == UINT32_MAX) break;
            VertexId nxt = g.edge(step).other(cur);
            if (path.is_cycle && nxt == first) break;
            came_by = step;
            cur = nxt;
        }
        return path;
    }
    return std::nullopt;
}

VertexId path_replace(MultiGraph& g, const VertexPath& path) {
    const auto& pv = path.vertices;
    auto invalid = [](const std::string& why) { return std::invalid_argument("path_replace: " + why); };

    if (pv.size() < 2) throw invalid("path needs at least two vertices");
    std::vector<char> in(g.vertex_id_bound(), 0);
    for (VertexId v : pv) {
        if (!g.has_vertex(v)) throw invalid("unknown " + vertex_name(v));
        if (in[v]) throw invalid("repeated " + vertex_name(v));
        if (!eligible_for_path(g, v)) throw invalid(vertex_name(v) + " is not a loop-free degree-2 vertex");
        in[v] = 1;
    }
    for (std::size_t i = 0; i + 1 < pv.size(); ++i)
        if (!g.adjacent(pv[i], pv[i + 1])) throw invalid("consecutive vertices not adjacent");

    // Edges leaving the path, keyed by the path vertex they start from.
    std::vector<std::pair<VertexId, VertexId>> external;
    for (VertexId v : pv)
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.edge(e).other(v);
            if (!in[w]) external.emplace_back(v, w);
        }

    if (path.is_cycle) {
        if (!external.empty()) throw invalid("cycle flag set but the run has outside neighbors");
        if (!g.adjacent(pv.back(), pv.front())) throw invalid("cycle does not close");
    } else {
        if (external.size() != 2) throw invalid("path must have exactly two outside attachments");
        bool front_ok = false, back_ok = false;
        for (auto [v, w] : external) {
            if (eligible_for_path(g, w)) throw invalid("path is not maximal");
            front_ok = front_ok || v == pv.front();
            back_ok = back_ok || v == pv.back();
        }
        if (!front_ok || !back_ok) throw invalid("outside attachments must sit at the path ends");
        if (external[0].first != pv.front()) std::swap(external[0], external[1]);
    }

    for (VertexId v : pv) g.remove_vertex(v);
    VertexId replacement = g.add_vertex(/*is_virtual=*/true);
    if (path.is_cycle) {
        g.add_edge(replacement, replacement);
    } else {
        g.add_edge(replacement, external[0].second);
        g.add_edge(replacement, external[1].second);
    }
    return replacement;
}

MultiGraph induced_subgraph(const MultiGraph& g, std::span<const VertexId> subset) {
    const auto in = membership(g, subset);
    MultiGraph h = g;
    for (VertexId v : g.vertices())
        if (!in[v]) h.remove_vertex(v);
    return h;
}

bool has_property_r(const MultiGraph& g) {
    for (VertexId v : g.vertices())
        if (g.degree(v) < 2) return false;
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.edge(e);
        if (!ed.is_loop() && g.degree(ed.a) == 2 && g.degree(ed.b) == 2) return false;
    }
    return true;
}

}  // namespace ambt
