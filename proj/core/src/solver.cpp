#include "ambt/solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "ambt/errors.hpp"

namespace ambt {

void ReplacementLog::record(VertexId vp, std::vector<VertexId> path) {
    if (contains(vp)) throw std::invalid_argument("ReplacementLog: vertex " + std::to_string(vp) + " recorded twice");
    entries_.push_back({vp, std::move(path)});
}

bool ReplacementLog::contains(VertexId vp) const {
    return std::any_of(entries_.begin(), entries_.end(), [vp](const Replacement& r) { return r.virtual_vertex == vp; });
}

const std::vector<VertexId>& ReplacementLog::path_of(VertexId vp) const {
    for (const auto& r : entries_)
        if (r.virtual_vertex == vp) return r.path;
    throw std::out_of_range("ReplacementLog: no entry for vertex " + std::to_string(vp));
}

std::vector<VertexId> VfvsOutcome::virtual_picked() const {
    std::vector<VertexId> out;
    for (VertexId v : picked)
        if (is_virtual(v)) out.push_back(v);
    return out;
}

namespace {

void prune_low_degree(MultiGraph& h, std::vector<VertexId>& pruned) {
    std::vector<VertexId> work;
    for (VertexId v : h.vertices())
        if (h.degree(v) <= 1) work.push_back(v);
    while (!work.empty()) {
        VertexId v = work.back();
        work.pop_back();
        if (!h.has_vertex(v)) continue;
        std::vector<VertexId> nbrs = h.neighbors(v);
        h.remove_vertex(v);
        pruned.push_back(v);
        for (VertexId w : nbrs)
            if (h.degree(w) <= 1) work.push_back(w);
    }
}

std::optional<VertexId> lowest_loop_vertex(const MultiGraph& h) {
    for (VertexId v : h.vertices())
        if (h.has_loop(v)) return v;
    return std::nullopt;
}

}  // namespace

VfvsOutcome sample_virtual_fvs(const MultiGraph& g, std::int64_t k, Rng& rng) {
    if (k < 0) throw std::invalid_argument("sample_virtual_fvs: negative budget");
    VfvsOutcome out;
    MultiGraph h = g;
    for (;;) {
        prune_low_degree(h, out.pruned);
        while (auto path = find_maximal_deg2_path(h)) {
            VertexId vp = path_replace(h, *path);
            out.log.record(vp, std::move(path->vertices));
        }
        if (h.empty()) break;
        // Pruning leaves minimum degree 2, so a cycle exists from here on.
        if (k <= 0) {
            out.verdict = VfvsOutcome::Verdict::No;
            return out;
        }

        VertexId pick;
        if (auto loop = lowest_loop_vertex(h)) {
            pick = *loop;
        } else {
            const auto edges = h.edges();
            const Edge& e = h.edge(edges[rng.below(edges.size())]);
            pick = rng.below(2) == 0 ? e.a : e.b;
        }
        h.remove_vertex(pick);
        out.picked.push_back(pick);
        --k;
    }
    return out;
}

std::vector<VertexId> safe_set(VertexId vp, const ReplacementLog& log) {
    std::vector<VertexId> out;
    std::vector<VertexId> stack{vp};
    log.path_of(vp);  // throws for an unknown key
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (log.contains(v)) {
            for (VertexId w : log.path_of(v)) stack.push_back(w);
        } else {
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

WeightedInstance build_weighted_instance(const MultiGraph& g, const VfvsOutcome& out, std::size_t ell) {
    if (!out.found()) throw std::invalid_argument("build_weighted_instance: sampler answered No");
    WeightedInstance inst;
    inst.graph = g;
    const Weight heavy = static_cast<Weight>(g.edge_count()) + 1;
    std::vector<std::pair<EdgeId, Weight>> extra;
    Weight virtual_count = 0;
    for (VertexId x : out.picked) {
        if (out.is_virtual(x)) {
            VertexId w = inst.graph.add_vertex();
            for (VertexId s : safe_set(x, out.log)) extra.emplace_back(inst.graph.add_edge(w, s), heavy);
            ++virtual_count;
        } else {
            inst.graph.remove_vertex(x);
        }
    }
    inst.weights.assign(inst.graph.edge_id_bound(), 1);
    for (auto [e, w] : extra) inst.weights[e] = w;
    inst.target = static_cast<Weight>(ell) + virtual_count * heavy;
    return inst;
}

AmbtAnswer solve_once(const MultiGraph& g, std::size_t ell, Rng& rng) {
    if (!g.is_simple()) throw std::invalid_argument("solve_once: input graph must be simple");
    if (ell == 0) return {true, {}};
    const std::int64_t k = static_cast<std::int64_t>(g.vertex_count()) - 2 * static_cast<std::int64_t>(ell);
    if (k < 0) return {false, {}};

    VfvsOutcome out = sample_virtual_fvs(g, k, rng);
    if (!out.found()) return {false, {}};
    WeightedInstance inst = build_weighted_instance(g, out, ell);
    auto heavy = meets_target(inst);
    if (!heavy) return {false, {}};

    Matching m;
    for (EdgeId e : heavy->edges) {
        if (inst.weight(e) != 1) continue;
        const Edge& ed = inst.graph.edge(e);
        m.add(ed.a, ed.b);
    }
    if (m.size() < ell || !is_acyclic_matching(g, m))
        throw InternalError("solve_once: reconstructed matching failed verification");
    return {true, std::move(m)};
}

std::pair<std::uint64_t, bool> default_trial_budget(std::int64_t k, std::int64_t cap) {
    if (cap < 1) throw std::invalid_argument("trial cap must be at least 1");
    const auto limit = static_cast<std::uint64_t>(cap);
    std::uint64_t budget = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        if (budget > limit / 10) return {limit, true};
        budget *= 10;
    }
    if (budget > limit) return {limit, true};
    return {budget, false};
}

SolveReport solve(const MultiGraph& g, std::size_t ell, const SolveOptions& options) {
    SolveReport report;
    report.k = static_cast<std::int64_t>(g.vertex_count()) - 2 * static_cast<std::int64_t>(ell);
    if (options.cap < 1) throw std::invalid_argument("trial cap must be at least 1");
    if (options.trials) {
        if (*options.trials < 1) throw std::invalid_argument("trial count must be at least 1");
        report.budget = static_cast<std::uint64_t>(*options.trials);
    } else {
        std::tie(report.budget, report.capped) = default_trial_budget(report.k, options.cap);
    }
    if (!g.is_simple()) throw std::invalid_argument("solve: input graph must be simple");

    const std::uint64_t budget = report.budget;
    const unsigned threads = std::max(1u, options.threads);

    if (threads == 1 || budget == 1) {
        for (std::uint64_t i = 0; i < budget; ++i) {
            Rng rng = Rng::for_stream(options.seed, i);
            AmbtAnswer a = solve_once(g, ell, rng);
            if (a.yes) {
                report.answer = std::move(a);
                report.trials_run = i + 1;
                return report;
            }
        }
        report.trials_run = budget;
        return report;
    }

    // Trials are handed out in increasing index order, so every index below
    // the best yes found has been evaluated once all workers stop.
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{budget};
    std::vector<AmbtAnswer> found(threads);
    std::vector<std::uint64_t> found_at(threads, budget);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (;;) {
                    std::uint64_t i = next.fetch_add(1);
                    if (i >= budget || i > best.load()) return;
                    Rng rng = Rng::for_stream(options.seed, i);
                    AmbtAnswer a = solve_once(g, ell, rng);
                    if (!a.yes) continue;
                    if (i < found_at[t]) {
                        found_at[t] = i;
                        found[t] = std::move(a);
                    }
                    std::uint64_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            } catch (...) {
                errors[t] = std::current_exception();
                best.store(0);
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    const auto winner = std::min_element(found_at.begin(), found_at.end()) - found_at.begin();
    if (found_at[winner] < budget) {
        report.answer = std::move(found[winner]);
        report.trials_run = found_at[winner] + 1;
    } else {
        report.trials_run = budget;
    }
    return report;
}

}  // namespace ambt
