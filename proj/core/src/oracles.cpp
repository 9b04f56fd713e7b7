#include "ambt/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "ambt/errors.hpp"

namespace ambt {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

struct Dense {
    std::vector<VertexId> ids;
    std::vector<Mask> adj;
    int n = 0;
};

Dense to_dense(const MultiGraph& g, const OracleLimits& limits, const char* who) {
    if (!g.is_simple()) throw std::invalid_argument(std::string(who) + ": graph must be simple");
    const std::size_t limit = std::min(limits.max_vertices, kOracleVertexCeiling);
    if (g.vertex_count() > limit)
        throw LimitExceeded(std::string(who) + ": " + std::to_string(g.vertex_count()) + " vertices exceeds the limit of " +
                            std::to_string(limit));
    Dense d;
    d.ids = g.vertices();
    d.n = static_cast<int>(d.ids.size());
    std::vector<int> index(g.vertex_id_bound(), -1);
    for (int i = 0; i < d.n; ++i) index[d.ids[i]] = i;
    d.adj.assign(d.n, 0);
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.edge(e);
        d.adj[index[ed.a]] |= bit(index[ed.b]);
        d.adj[index[ed.b]] |= bit(index[ed.a]);
    }
    return d;
}

int lowest(Mask m) { return std::countr_zero(m); }

int components(const Dense& d, Mask s) {
    int count = 0;
    while (s) {
        Mask frontier = bit(lowest(s));
        Mask seen = frontier;
        while (frontier) {
            int v = lowest(frontier);
            frontier &= frontier - 1;
            Mask fresh = d.adj[v] & s & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
        s &= ~seen;
        ++count;
    }
    return count;
}

int induced_edges(const Dense& d, Mask s) {
    int twice = 0;
    for (Mask r = s; r; r &= r - 1) twice += std::popcount(d.adj[lowest(r)] & s);
    return twice / 2;
}

bool induces_forest(const Dense& d, Mask s) { return induced_edges(d, s) == std::popcount(s) - components(d, s); }

/// Number of perfect matchings of the subgraph induced by s, saturating at 2.
int perfect_matchings_upto2(const Dense& d, Mask s) {
    if (!s) return 1;
    int v = lowest(s);
    Mask rest = s & ~bit(v);
    int total = 0;
    for (Mask cand = d.adj[v] & rest; cand; cand &= cand - 1) {
        total += perfect_matchings_upto2(d, rest & ~bit(lowest(cand)));
        if (total >= 2) return 2;
    }
    return total;
}

Matching to_matching(const Dense& d, const std::vector<std::pair<int, int>>& pairs) {
    Matching m;
    for (auto [a, b] : pairs) m.add(d.ids[a], d.ids[b]);
    return m;
}

std::vector<VertexId> to_vertices(const Dense& d, Mask s) {
    std::vector<VertexId> out;
    for (; s; s &= s - 1) out.push_back(d.ids[lowest(s)]);
    return out;
}

/// Depth-first enumeration of matchings where each vertex is either left
/// unmatched or paired with a higher-indexed neighbor, so every matching is
/// reached exactly once. All three restricted classes are closed under
/// dropping edges, so a failed check prunes the whole subtree.
class MatchingSearch {
public:
    MatchingSearch(const Dense& d, std::optional<MatchingKind> kind) : d_(d), kind_(kind) {}

    void enumerate(const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
        visit_ = &visit;
        maximize_ = false;
        run(0);
    }

    std::vector<std::pair<int, int>> maximize() {
        maximize_ = true;
        have_best_ = false;
        best_.clear();
        run(0);
        return best_;
    }

private:
    bool can_add(int i, int j) const {
        if (!kind_) return true;
        const Mask next = sat_ | bit(i) | bit(j);
        switch (*kind_) {
            case MatchingKind::Induced: return !(d_.adj[i] & sat_) && !(d_.adj[j] & sat_);
            case MatchingKind::Acyclic: return induces_forest(d_, next);
            case MatchingKind::UniquelyRestricted: return perfect_matchings_upto2(d_, next) == 1;
        }
        return false;
    }

    void run(int i) {
        while (i < d_.n && (sat_ & bit(i))) ++i;
        if (maximize_ && have_best_) {
            const Mask remaining = (bit(d_.n) - 1) & ~(bit(i) - 1) & ~sat_;
            if (cur_.size() + std::popcount(remaining) / 2 <= best_.size()) return;
        }
        if (i >= d_.n) {
            if (maximize_) {
                if (!have_best_ || cur_.size() > best_.size()) best_ = cur_;
                have_best_ = true;
            } else {
                (*visit_)(cur_);
            }
            return;
        }
        for (Mask cand = d_.adj[i] & ~sat_ & ~(bit(i + 1) - 1); cand; cand &= cand - 1) {
            int j = lowest(cand);
            if (!can_add(i, j)) continue;
            cur_.emplace_back(i, j);
            sat_ |= bit(i) | bit(j);
            run(i + 1);
            sat_ &= ~(bit(i) | bit(j));
            cur_.pop_back();
        }
        run(i + 1);
    }

    const Dense& d_;
    std::optional<MatchingKind> kind_;
    bool maximize_ = false;
    bool have_best_ = false;
    const std::function<void(const std::vector<std::pair<int, int>>&)>* visit_ = nullptr;
    Mask sat_ = 0;
    std::vector<std::pair<int, int>> cur_, best_;
};

Problem problem_of(MatchingKind kind) {
    switch (kind) {
        case MatchingKind::Acyclic: return Problem::AM;
        case MatchingKind::Induced: return Problem::IM;
        case MatchingKind::UniquelyRestricted: return Problem::URM;
    }
    return Problem::AM;
}

Mask mis(const Dense& d, Mask p) {
    if (!p) return 0;
    int best_v = -1, best_deg = -1;
    for (Mask r = p; r; r &= r - 1) {
        int v = lowest(r);
        int deg = std::popcount(d.adj[v] & p);
        if (deg <= 1) return bit(v) | mis(d, p & ~bit(v) & ~d.adj[v]);
        if (deg > best_deg) {
            best_deg = deg;
            best_v = v;
        }
    }
    Mask without = mis(d, p & ~bit(best_v));
    Mask with = bit(best_v) | mis(d, p & ~bit(best_v) & ~d.adj[best_v]);
    return std::popcount(with) >= std::popcount(without) ? with : without;
}

/// Calls visit(mask) for every subset of n bits of size s.
template <class F>
void for_each_subset_of_size(int n, int s, F&& visit) {
    if (s == 0) {
        visit(Mask{0});
        return;
    }
    if (s > n) return;
    Mask c = (Mask{1} << s) - 1;
    const Mask end = bit(n);
    for (;;) {
        if (!visit(c)) return;
        Mask lo = c & (~c + 1);
        Mask ripple = c + lo;
        if (ripple == 0) return;
        c = (((ripple ^ c) >> 2) / lo) | ripple;
        if (c >= end) return;
    }
}

}  // namespace

std::string_view to_string(Problem p) {
    switch (p) {
        case Problem::AM: return "AM";
        case Problem::IM: return "IM";
        case Problem::URM: return "URM";
        case Problem::MM: return "MM";
        case Problem::IS: return "IS";
        case Problem::FVS: return "FVS";
        case Problem::X3C: return "X3C";
        case Problem::MWM: return "MWM";
    }
    return "?";
}

OracleReport max_restricted_matching(const MultiGraph& g, MatchingKind kind, const OracleLimits& limits) {
    Dense d = to_dense(g, limits, "max_restricted_matching");
    MatchingSearch search(d, kind);
    auto best = search.maximize();
    OracleReport r;
    r.problem = problem_of(kind);
    r.optimum = static_cast<std::int64_t>(best.size());
    r.matching = to_matching(d, best);
    return r;
}

void for_each_restricted_matching(const MultiGraph& g, MatchingKind kind, const std::function<void(const Matching&)>& visit,
                                  const OracleLimits& limits) {
    Dense d = to_dense(g, limits, "for_each_restricted_matching");
    MatchingSearch search(d, kind);
    search.enumerate([&](const std::vector<std::pair<int, int>>& pairs) { visit(to_matching(d, pairs)); });
}

std::vector<Matching> all_maximum_restricted_matchings(const MultiGraph& g, MatchingKind kind, const OracleLimits& limits) {
    std::vector<Matching> out;
    for_each_restricted_matching(
        g, kind,
        [&](const Matching& m) {
            if (!out.empty() && m.size() < out.front().size()) return;
            if (!out.empty() && m.size() > out.front().size()) out.clear();
            out.push_back(m);
        },
        limits);
    return out;
}

OracleReport max_independent_set(const MultiGraph& g, const OracleLimits& limits) {
    Dense d = to_dense(g, limits, "max_independent_set");
    const Mask all = bit(d.n) - 1;
    Mask best = mis(d, all);
    OracleReport r;
    r.problem = Problem::IS;
    r.optimum = std::popcount(best);
    r.vertices = to_vertices(d, best);
    return r;
}

OracleReport min_fvs(const MultiGraph& g, const OracleLimits& limits) {
    Dense d = to_dense(g, limits, "min_fvs");
    const Mask all = bit(d.n) - 1;
    for (int s = 0; s <= d.n; ++s) {
        std::optional<Mask> hit;
        for_each_subset_of_size(d.n, s, [&](Mask x) {
            if (induces_forest(d, all & ~x)) {
                hit = x;
                return false;
            }
            return true;
        });
        if (hit) {
            OracleReport r;
            r.problem = Problem::FVS;
            r.optimum = s;
            r.vertices = to_vertices(d, *hit);
            return r;
        }
    }
    throw InternalError("min_fvs: the full vertex set is always a feedback vertex set");
}

std::vector<std::vector<VertexId>> all_fvs(const MultiGraph& g, std::size_t size_cap, const OracleLimits& limits) {
    Dense d = to_dense(g, limits, "all_fvs");
    const Mask all = bit(d.n) - 1;
    std::vector<std::vector<VertexId>> out;
    const int top = static_cast<int>(std::min<std::size_t>(size_cap, d.n));
    for (int s = 0; s <= top; ++s)
        for_each_subset_of_size(d.n, s, [&](Mask x) {
            if (induces_forest(d, all & ~x)) out.push_back(to_vertices(d, x));
            return true;
        });
    return out;
}

OracleReport max_matching(const MultiGraph& g, const OracleLimits& limits) {
    Dense d = to_dense(g, limits, "max_matching");
    MatchingSearch search(d, std::nullopt);
    auto best = search.maximize();
    OracleReport r;
    r.problem = Problem::MM;
    r.optimum = static_cast<std::int64_t>(best.size());
    r.matching = to_matching(d, best);
    return r;
}

OracleReport brute_force_mwm(const WeightedInstance& inst, const OracleLimits& limits) {
    const MultiGraph& g = inst.graph;
    Dense d = to_dense(g, limits, "brute_force_mwm");
    std::vector<int> index(g.vertex_id_bound(), -1);
    for (int i = 0; i < d.n; ++i) index[d.ids[i]] = i;
    std::vector<std::vector<Weight>> w(d.n, std::vector<Weight>(d.n, 0));
    for (EdgeId e : g.edges()) {
        const Weight we = inst.weights.at(e);
        if (we < 0) throw std::invalid_argument("brute_force_mwm: negative weight");
        const Edge& ed = g.edge(e);
        w[index[ed.a]][index[ed.b]] = w[index[ed.b]][index[ed.a]] = we;
    }

    Weight best = 0, cur = 0;
    std::vector<std::pair<int, int>> best_pairs, pairs;
    Mask sat = 0;
    std::function<void(int)> run = [&](int i) {
        while (i < d.n && (sat & bit(i))) ++i;
        if (i >= d.n) {
            if (cur > best) {
                best = cur;
                best_pairs = pairs;
            }
            return;
        }
        for (Mask cand = d.adj[i] & ~sat & ~(bit(i + 1) - 1); cand; cand &= cand - 1) {
            int j = lowest(cand);
            sat |= bit(i) | bit(j);
            cur += w[i][j];
            pairs.emplace_back(i, j);
            run(i + 1);
            pairs.pop_back();
            cur -= w[i][j];
            sat &= ~(bit(i) | bit(j));
        }
        run(i + 1);
    };
    run(0);

    OracleReport r;
    r.problem = Problem::MWM;
    r.optimum = best;
    r.matching = to_matching(d, best_pairs);
    return r;
}

std::optional<std::vector<std::size_t>> solve_x3c(std::uint32_t n, const std::vector<Triple>& sets, const OracleLimits& limits) {
    if (n % 3 != 0) throw std::invalid_argument("solve_x3c: universe size must be a multiple of 3");
    if (n > std::min(limits.x3c_universe, kOracleVertexCeiling) || sets.size() > limits.x3c_sets)
        throw LimitExceeded("solve_x3c: instance exceeds the configured size limits");
    std::vector<Mask> set_mask(sets.size());
    std::vector<std::vector<std::size_t>> containing(n);
    for (std::size_t s = 0; s < sets.size(); ++s) {
        const Triple& t = sets[s];
        for (std::uint32_t e : t)
            if (e < 1 || e > n) throw std::invalid_argument("solve_x3c: element outside [1, n]");
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw std::invalid_argument("solve_x3c: repeated element in a triple");
        for (std::uint32_t e : t) {
            set_mask[s] |= bit(static_cast<int>(e - 1));
            containing[e - 1].push_back(s);
        }
    }
    const Mask all = bit(static_cast<int>(n)) - 1;
    std::vector<std::size_t> chosen;
    std::function<bool(Mask)> run = [&](Mask covered) {
        if (covered == all) return true;
        const int e = lowest(~covered);
        for (std::size_t s : containing[e]) {
            if (set_mask[s] & covered) continue;
            chosen.push_back(s);
            if (run(covered | set_mask[s])) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!run(0)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace ambt
