#include "ambt/weighted_matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ambt/errors.hpp"

namespace ambt {

namespace {

// Primal-dual blossom algorithm after Galil's exposition, structured like
// Joris van Rantwijk's well-known mwmatching. Vertices are 0..n-1, edge k
// has endpoints 2k and 2k+1, blossoms are numbered n..2n-1. All duals stay
// integral when the weights are integers.
class BlossomSolver {
public:
    struct InEdge {
        int u, v;
        Weight w;
    };

    BlossomSolver(int n, std::vector<InEdge> edges) : n_(n), edges_(std::move(edges)) {}

    /// mate[v] is the partner of v or -1.
    std::vector<int> solve() {
        const int m = static_cast<int>(edges_.size());
        if (n_ == 0 || m == 0) return std::vector<int>(n_, -1);

        Weight max_weight = 0;
        for (const auto& e : edges_) max_weight = std::max(max_weight, e.w);

        endpoint_.resize(2 * m);
        for (int p = 0; p < 2 * m; ++p) endpoint_[p] = p % 2 == 0 ? edges_[p / 2].u : edges_[p / 2].v;
        neighbend_.assign(n_, {});
        for (int k = 0; k < m; ++k) {
            neighbend_[edges_[k].u].push_back(2 * k + 1);
            neighbend_[edges_[k].v].push_back(2 * k);
        }

        mate_.assign(n_, -1);
        label_.assign(2 * n_, 0);
        labelend_.assign(2 * n_, -1);
        inblossom_.resize(n_);
        for (int v = 0; v < n_; ++v) inblossom_[v] = v;
        blossomparent_.assign(2 * n_, -1);
        blossomchilds_.assign(2 * n_, {});
        blossombase_.assign(2 * n_, -1);
        for (int v = 0; v < n_; ++v) blossombase_[v] = v;
        blossomendps_.assign(2 * n_, {});
        bestedge_.assign(2 * n_, -1);
        blossombestedges_.assign(2 * n_, {});
        has_bestedges_.assign(2 * n_, 0);
        unused_.clear();
        for (int b = n_; b < 2 * n_; ++b) unused_.push_back(b);
        dualvar_.assign(2 * n_, 0);
        for (int v = 0; v < n_; ++v) dualvar_[v] = max_weight;
        allowedge_.assign(m, 0);

        for (int stage = 0; stage < n_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n_; b < 2 * n_; ++b) {
                blossombestedges_[b].clear();
                has_bestedges_[b] = 0;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();

            for (int v = 0; v < n_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

            bool augmented = false;
            for (;;) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    for (int p : neighbend_[v]) {
                        int k = p / 2;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        Weight kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge_[k] = 1;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                int deltatype = 1;
                Weight delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
                int deltaedge = -1, deltablossom = -1;

                for (int v = 0; v < n_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        Weight d = slack(bestedge_[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * n_; ++b) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        Weight ks = slack(bestedge_[b]);
                        if (ks % 2 != 0) throw InternalError("max_weight_matching: odd slack between S-blossoms");
                        Weight d = ks / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 && dualvar_[b] < delta) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }

                for (int v = 0; v < n_; ++v) {
                    if (label_[inblossom_[v]] == 1) {
                        dualvar_[v] -= delta;
                    } else if (label_[inblossom_[v]] == 2) {
                        dualvar_[v] += delta;
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) {
                            dualvar_[b] += delta;
                        } else if (label_[b] == 2) {
                            dualvar_[b] -= delta;
                        }
                    }
                }

                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    int i = edges_[deltaedge].u, j = edges_[deltaedge].v;
                    if (label_[inblossom_[i]] == 0) std::swap(i, j);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    queue_.push_back(edges_[deltaedge].u);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;

            for (int b = n_; b < 2 * n_; ++b)
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0)
                    expand_blossom(b, true);
        }

        std::vector<int> result(n_, -1);
        for (int v = 0; v < n_; ++v)
            if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
        return result;
    }

private:
    Weight slack(int k) const { return dualvar_[edges_[k].u] + dualvar_[edges_[k].v] - 2 * edges_[k].w; }

    // Python-style index into a cyclic child list (negative counts from the end).
    static int& cyc(std::vector<int>& v, int j) {
        const int s = static_cast<int>(v.size());
        return v[((j % s) + s) % s];
    }

    void leaves(int b, std::vector<int>& out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) leaves(t, out);
    }

    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p) {
        for (;;) {
            int b = inblossom_[w];
            label_[w] = label_[b] = t;
            labelend_[w] = labelend_[b] = p;
            bestedge_[w] = bestedge_[b] = -1;
            if (t == 1) {
                leaves(b, queue_);
                return;
            }
            int base = blossombase_[b];
            w = endpoint_[mate_[base]];
            t = 1;
            p = mate_[base] ^ 1;
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[k].u, w = edges_[k].v;
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        int b = unused_.back();
        unused_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<int> path, endps;
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        blossomchilds_[b] = path;
        blossomendps_[b] = endps;
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (int leaf : leaves(b)) {
            if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }

        std::vector<int> bestedgeto(2 * n_, -1);
        for (int child : path) {
            std::vector<int> candidates;
            if (!has_bestedges_[child]) {
                for (int leaf : leaves(child))
                    for (int p : neighbend_[leaf]) candidates.push_back(p / 2);
            } else {
                candidates = blossombestedges_[child];
            }
            for (int kk : candidates) {
                int i = edges_[kk].u, j = edges_[kk].v;
                if (inblossom_[j] == b) std::swap(i, j);
                int bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj])))
                    bestedgeto[bj] = kk;
            }
            blossombestedges_[child].clear();
            has_bestedges_[child] = 0;
            bestedge_[child] = -1;
        }
        blossombestedges_[b].clear();
        for (int kk : bestedgeto)
            if (kk != -1) blossombestedges_[b].push_back(kk);
        has_bestedges_[b] = 1;
        bestedge_[b] = -1;
        for (int kk : blossombestedges_[b])
            if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds_[b]) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int leaf : leaves(s)) inblossom_[leaf] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            std::vector<int>& childs = blossomchilds_[b];
            std::vector<int>& endps = blossomendps_[b];
            const int len = static_cast<int>(childs.size());
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::find(childs.begin(), childs.end(), entrychild) - childs.begin());
            int jstep, endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[cyc(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[cyc(endps, j - endptrick) / 2] = 1;
                j += jstep;
                p = cyc(endps, j - endptrick) ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            int bv = cyc(childs, j);
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (cyc(childs, j) != entrychild) {
                bv = cyc(childs, j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int labelled = -1;
                for (int leaf : leaves(bv)) {
                    if (label_[leaf] != 0) {
                        labelled = leaf;
                        break;
                    }
                }
                if (labelled != -1) {
                    label_[labelled] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(labelled, 2, labelend_[labelled]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
        bestedge_[b] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= n_) augment_blossom(t, v);
        std::vector<int>& childs = blossomchilds_[b];
        std::vector<int>& endps = blossomendps_[b];
        const int len = static_cast<int>(childs.size());
        const int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
        int j = i;
        int jstep, endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = cyc(childs, j);
            int p = cyc(endps, j - endptrick) ^ endptrick;
            if (t >= n_) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = cyc(childs, j);
            if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(childs.begin(), childs.begin() + i, childs.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase_[b] = blossombase_[childs[0]];
    }

    void augment_matching(int k) {
        const int ends[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
        for (const auto& start : ends) {
            int s = start[0], p = start[1];
            for (;;) {
                int bs = inblossom_[s];
                if (bs >= n_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= n_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int n_;
    std::vector<InEdge> edges_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_, label_, labelend_, inblossom_, blossomparent_, blossombase_, bestedge_, unused_;
    std::vector<std::vector<int>> blossomchilds_, blossomendps_, blossombestedges_;
    std::vector<char> has_bestedges_, allowedge_;
    std::vector<Weight> dualvar_;
    std::vector<int> queue_;
};

}  // namespace

WeightedMatching max_weight_matching(const WeightedInstance& inst) {
    const MultiGraph& g = inst.graph;
    if (!g.is_simple()) throw std::invalid_argument("max_weight_matching: graph must have no loops or parallel edges");

    const auto verts = g.vertices();
    std::vector<int> index(g.vertex_id_bound(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);

    const auto edge_ids = g.edges();
    std::vector<BlossomSolver::InEdge> edges;
    std::vector<EdgeId> kept;
    for (EdgeId e : edge_ids) {
        if (e >= inst.weights.size()) throw std::invalid_argument("max_weight_matching: edge " + std::to_string(e) + " has no weight");
        const Weight w = inst.weights[e];
        if (w < 0) throw std::invalid_argument("max_weight_matching: negative weight on edge " + std::to_string(e));
        // Zero-weight edges never improve the total; dropping them keeps the
        // result free of useless pairs.
        if (w == 0) continue;
        const Edge& ed = g.edge(e);
        edges.push_back({index[ed.a], index[ed.b], w});
        kept.push_back(e);
    }

    BlossomSolver solver(static_cast<int>(verts.size()), edges);
    const auto mate = solver.solve();

    WeightedMatching out;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (mate[edges[k].u] == edges[k].v) {
            out.edges.push_back(kept[k]);
            out.matching.add(verts[edges[k].u], verts[edges[k].v]);
            out.total += edges[k].w;
        }
    }
    return out;
}

std::optional<WeightedMatching> meets_target(const WeightedInstance& inst) {
    WeightedMatching best = max_weight_matching(inst);
    if (best.total < inst.target) return std::nullopt;
    return best;
}

Matching maximum_cardinality_matching(const MultiGraph& g) {
    WeightedInstance inst{g, std::vector<Weight>(g.edge_id_bound(), 1), 0};
    return max_weight_matching(inst).matching;
}

}  // namespace ambt
