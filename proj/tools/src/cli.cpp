#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ambt/builders.hpp"
#include "ambt/errors.hpp"
#include "ambt/io.hpp"
#include "ambt/matching.hpp"
#include "ambt/oracles.hpp"
#include "ambt/reductions.hpp"
#include "ambt/solver.hpp"

namespace ambt::cli {

namespace {

struct RunConfig {
    std::uint64_t seed = 0;
    std::optional<std::int64_t> trials;
    std::int64_t cap = 1'000'000;
    unsigned threads = 1;
    OracleLimits limits;
    bool quiet = false;
};

/// Writes "c" lines unless quiet.
class Report {
public:
    Report(std::ostream& out, bool quiet) : out_(out), quiet_(quiet) {}
    template <typename... Parts>
    void comment(const Parts&... parts) {
        if (quiet_) return;
        out_ << "c ";
        (out_ << ... << parts);
        out_ << '\n';
    }

private:
    std::ostream& out_;
    bool quiet_;
};

MultiGraph load_simple_graph(const std::string& path) {
    GraphFile f = parse_graph(read_file(path));
    if (f.weighted()) throw std::invalid_argument(path + ": expected an unweighted 'p edge' file");
    if (!f.graph.is_simple()) throw std::invalid_argument(path + ": graph has loops or parallel edges");
    return std::move(f.graph);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

std::string vertex_lines(const std::vector<VertexId>& vs) {
    std::string s;
    for (VertexId v : vs) s += "v " + std::to_string(v + 1) + "\n";
    return s;
}

MatchingKind matching_kind(const std::string& k) {
    if (k == "am") return MatchingKind::Acyclic;
    if (k == "im") return MatchingKind::Induced;
    return MatchingKind::UniquelyRestricted;
}

int cmd_solve(const RunConfig& cfg, const std::string& path, std::int64_t ell, std::ostream& out, std::ostream& err) {
    if (ell < 0) throw std::invalid_argument("--ell must be non-negative");
    MultiGraph g = load_simple_graph(path);
    SolveOptions opt{.seed = cfg.seed, .trials = cfg.trials, .cap = cfg.cap, .threads = cfg.threads};
    SolveReport r = solve(g, static_cast<std::size_t>(ell), opt);
    if (r.capped) err << "warning: 10^" << r.k << " trials exceed the cap; running " << r.budget << '\n';

    Report rep(out, cfg.quiet);
    rep.comment("seed ", cfg.seed);
    rep.comment("ell ", ell, " k ", r.k);
    rep.comment("budget ", r.budget, r.capped ? " capped" : " uncapped");
    rep.comment("trials ", r.trials_run);
    if (!r.answer.yes) {
        out << "s no\n";
        return kNo;
    }
    out << "s yes\n" << write_matching(r.answer.witness);
    return kYes;
}

int cmd_oracle(const RunConfig& cfg, const std::string& path, const std::string& kind, std::ostream& out) {
    MultiGraph g = load_simple_graph(path);
    OracleReport r;
    if (kind == "mm")
        r = max_matching(g, cfg.limits);
    else if (kind == "is")
        r = max_independent_set(g, cfg.limits);
    else if (kind == "fvs")
        r = min_fvs(g, cfg.limits);
    else
        r = max_restricted_matching(g, matching_kind(kind), cfg.limits);

    Report rep(out, cfg.quiet);
    rep.comment("problem ", to_string(r.problem));
    out << "s " << r.optimum << '\n';
    if (kind == "is" || kind == "fvs")
        out << vertex_lines(r.vertices);
    else
        out << write_matching(r.matching);
    return kYes;
}

int cmd_verify(const RunConfig& cfg, const std::string& graph_path, const std::string& matching_path,
               const std::string& kind, bool extract, std::ostream& out) {
    MultiGraph g = load_simple_graph(graph_path);
    Matching m = parse_matching(read_file(matching_path));
    for (VertexId v : m.saturated())
        if (!g.has_vertex(v)) throw std::out_of_range(matching_path + ": vertex " + std::to_string(v + 1) + " is not in the graph");

    Report rep(out, cfg.quiet);
    const MatchingKind mk = matching_kind(kind);
    rep.comment("kind ", to_string(mk), " size ", m.size());
    if (!is_matching(g, m)) {
        rep.comment("not a matching of the graph");
        out << "s invalid\n";
        return kNo;
    }
    if (!is_restricted_matching(g, m, mk)) {
        out << "s invalid\n";
        return kNo;
    }
    out << "s valid\n";
    if (!extract) return kYes;

    // Induced matchings are acyclic, so they use the same extractor.
    IndependentSetCert cert = mk == MatchingKind::UniquelyRestricted ? ur_to_independent(g, m) : acyclic_to_independent(g, m);
    const std::size_t need = mk == MatchingKind::UniquelyRestricted ? (m.size() + 2) / 2 : m.size();
    const bool ok = cert.vertices.size() >= need && is_independent_set(g, cert.vertices);
    rep.comment("independent set size ", cert.vertices.size(), " required ", need, ok ? " ok" : " VIOLATED");
    out << vertex_lines(cert.vertices);
    return ok ? kYes : kError;
}

std::string x3c_certificate(const Composition& c, const X3CFamily& fam, const OracleLimits& limits,
                            std::vector<std::string>& header) {
    std::ostringstream cert;
    const auto& idx = c.index;
    cert << "c composition certificate; vertex numbers are 1-based\n";
    cert << "ell " << c.ell << '\n';
    cert << "bound " << (c.certificate.kind == CompositionCertificate::Kind::VertexCover ? "vertex-cover" : "clique-modulator")
         << ' ' << c.certificate.vertices.size() << '\n';
    cert << "b";
    for (VertexId v : c.certificate.vertices) cert << ' ' << v + 1;
    cert << '\n';
    for (std::size_t j = 0; j < idx.gadgets.size(); ++j) {
        const SetGadget& gad = idx.gadgets[j];
        cert << "gadget " << j + 1 << " set " << gad.set[0] << ' ' << gad.set[1] << ' ' << gad.set[2] << " vertices";
        for (VertexId v : gad.interface) cert << ' ' << v + 1;
        for (VertexId v : {gad.hub_u, gad.hub_w, gad.pendant_u, gad.pendant_w}) cert << ' ' << v + 1;
        cert << '\n';
    }
    cert << "selector " << idx.selector_center + 1;
    for (VertexId v : idx.selector_leaves) cert << ' ' << v + 1;
    cert << '\n';

    std::optional<Matching> witness;
    std::size_t witness_from = 0;
    for (std::size_t q = 0; q < fam.instances.size(); ++q) {
        const auto& sets = fam.instances[q].sets;
        std::string status;
        try {
            auto sol = solve_x3c(fam.universe, sets, limits);
            status = sol ? "solvable" : "unsolvable";
            if (sol && !witness) {
                std::vector<Triple> chosen;
                for (std::size_t i : *sol) chosen.push_back(sets[i]);
                witness = x3c_solution_to_matching(idx, fam, chosen, q);
                witness_from = q;
            }
        } catch (const LimitExceeded&) {
            status = "unknown";
        }
        cert << "instance " << q + 1 << ' ' << status << '\n';
    }
    if (witness) cert << "c constructive matching from instance " << witness_from + 1 << '\n' << write_matching(*witness);
    header.push_back(witness ? "yes-instance: some member instance has an exact cover"
                             : "no member instance is known to have an exact cover");
    return cert.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Acyclic matchings below the trivial bound: solver, oracles, verifiers and generators", "ambt"};
    app.require_subcommand(1);
    app.add_flag("-q,--quiet", cfg.quiet, "Omit 'c' comment lines");

    std::string graph_path, matching_path, kind, out_path, cert_path, spec_path;
    std::int64_t ell = 0;
    bool extract = false;

    auto* solve_cmd = app.add_subcommand("solve", "Randomized search for an acyclic matching of size >= ell");
    solve_cmd->add_option("graph", graph_path, "Graph file")->required();
    solve_cmd->add_option("--ell", ell, "Target matching size")->required();
    solve_cmd->add_option("--seed", cfg.seed, "Random seed (default 0)");
    solve_cmd->add_option("--trials", cfg.trials, "Exact number of trials (default min(10^k, cap))");
    solve_cmd->add_option("--cap", cfg.cap, "Trial ceiling for the default budget")->capture_default_str();
    solve_cmd->add_option("--threads", cfg.threads, "Worker threads; output does not depend on it")->check(CLI::PositiveNumber);

    auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by exhaustive search");
    oracle_cmd->add_option("graph", graph_path, "Graph file")->required();
    oracle_cmd->add_option("--kind", kind, "Problem")->required()->check(CLI::IsMember({"am", "im", "urm", "mm", "is", "fvs"}));
    oracle_cmd->add_option("--max-vertices", cfg.limits.max_vertices, "Largest graph accepted")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Check a matching against a class");
    verify_cmd->add_option("graph", graph_path, "Graph file")->required();
    verify_cmd->add_option("matching", matching_path, "Matching file")->required();
    verify_cmd->add_option("--kind", kind, "Matching class")->required()->check(CLI::IsMember({"am", "im", "urm"}));
    verify_cmd->add_flag("--extract-is", extract, "Also print the independent set certified by the matching");

    auto* gen_cmd = app.add_subcommand("gen", "Instance generators");
    gen_cmd->require_subcommand(1);
    auto add_outputs = [&](CLI::App* sub) {
        sub->add_option("-o,--output", out_path, "Graph output file (default stdout)");
        sub->add_option("--cert", cert_path, "Certificate output file");
    };
    auto* gen_double = gen_cmd->add_subcommand("double", "Two copies joined by vertical edges");
    gen_double->add_option("graph", graph_path, "Input graph")->required();
    add_outputs(gen_double);
    auto* gen_panda = gen_cmd->add_subcommand("panda", "Graph whose acyclic matching number equals the independence number");
    gen_panda->add_option("graph", graph_path, "Input graph")->required();
    add_outputs(gen_panda);

    std::size_t rn = 0;
    double rp = 0.5;
    auto* gen_random = gen_cmd->add_subcommand("random", "Erdos-Renyi graph");
    gen_random->add_option("--n", rn, "Vertices")->required();
    gen_random->add_option("--p", rp, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen_random->add_option("--seed", cfg.seed, "Random seed (default 0)");
    gen_random->add_option("-o,--output", out_path, "Output file (default stdout)");

    std::uint32_t xn = 0;
    std::size_t xt = 0, xm = 0;
    bool plant = false, clique = false;
    auto* gen_x3c = gen_cmd->add_subcommand("x3c", "Compose a family of exact-cover instances into one graph");
    gen_x3c->add_option("spec", spec_path, "Family file; omit to draw a random family");
    gen_x3c->add_option("--n", xn, "Universe size of a random family");
    gen_x3c->add_option("--t", xt, "Instances in a random family");
    gen_x3c->add_option("--m", xm, "Triples per instance of a random family");
    gen_x3c->add_option("--seed", cfg.seed, "Random seed (default 0)");
    gen_x3c->add_flag("--plant", plant, "Plant an exact cover in the first random instance");
    gen_x3c->add_flag("--clique", clique, "Turn the instance selector into a clique");
    gen_x3c->add_option("--x3c-universe", cfg.limits.x3c_universe, "Largest universe the cover search accepts")->capture_default_str();
    gen_x3c->add_option("--x3c-sets", cfg.limits.x3c_sets, "Most triples the cover search accepts")->capture_default_str();
    add_outputs(gen_x3c);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kYes : kError;
    }

    try {
        if (*solve_cmd) return cmd_solve(cfg, graph_path, ell, out, err);
        if (*oracle_cmd) return cmd_oracle(cfg, graph_path, kind, out);
        if (*verify_cmd) return cmd_verify(cfg, graph_path, matching_path, kind, extract, out);

        std::vector<std::string> header;
        auto emit = [&](const MultiGraph& g, const std::string& cert) {
            if (cfg.quiet) header.clear();
            write_output(out_path, write_graph(g, header), out);
            if (!cert_path.empty()) write_output(cert_path, cert, out);
        };
        if (*gen_double) {
            MultiGraph g = load_simple_graph(graph_path);
            DoubledGraph d = double_with_vertical(g);
            header = {"ambt gen double " + graph_path, "copies of " + std::to_string(d.copy_size) + " vertices"};
            std::string cert = "c vertical edges\n" + write_matching(Matching(d.vertical));
            emit(d.graph, cert);
            return kYes;
        }
        if (*gen_panda) {
            MultiGraph g = load_simple_graph(graph_path);
            PandaGraph p = panda_construct(g);
            header = {"ambt gen panda " + graph_path, "copies of " + std::to_string(p.copy_size) + " vertices"};
            std::ostringstream cert;
            cert << "c edge types\n";
            static const char* names[] = {"I", "II", "III", "IV"};
            for (EdgeId e : p.graph.edges())
                cert << "t " << p.graph.edge(e).a + 1 << ' ' << p.graph.edge(e).b + 1 << ' '
                     << names[static_cast<int>(p.edge_types[e])] << '\n';
            emit(p.graph, cert.str());
            return kYes;
        }
        if (*gen_random) {
            Rng rng(cfg.seed);
            MultiGraph g = random_graph(rn, rp, rng);
            std::ostringstream p;
            p << rp;
            header = {"ambt gen random --n " + std::to_string(rn) + " --p " + p.str() + " --seed " + std::to_string(cfg.seed)};
            emit(g, "");
            return kYes;
        }
        if (*gen_x3c) {
            X3CFamily fam;
            if (!spec_path.empty()) {
                fam = parse_x3c(read_file(spec_path));
                header.push_back("ambt gen x3c " + spec_path + (clique ? " --clique" : ""));
            } else {
                if (xn == 0 || xt == 0 || xm == 0) throw std::invalid_argument("gen x3c: give a spec file or --n, --t and --m");
                Rng rng(cfg.seed);
                fam = random_x3c_family(xn, xt, xm, plant, rng);
                header.push_back("ambt gen x3c --n " + std::to_string(xn) + " --t " + std::to_string(xt) + " --m " +
                                 std::to_string(xm) + " --seed " + std::to_string(cfg.seed) + (plant ? " --plant" : "") +
                                 (clique ? " --clique" : ""));
            }
            Composition c = x3c_compose(fam, clique);
            header.push_back("ell " + std::to_string(c.ell));
            header.push_back("gadgets " + std::to_string(c.index.gadgets.size()) + " instances " +
                             std::to_string(fam.instances.size()));
            std::string cert = x3c_certificate(c, fam, cfg.limits, header);
            emit(c.graph, cert);
            return kYes;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

}  // namespace ambt::cli
