#include "ambt/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ambt/errors.hpp"

namespace ambt {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
    std::vector<std::string_view> fields;
};

std::vector<std::string_view> split(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

/// Non-blank, non-comment lines; comment bodies go to `comments` if given.
std::vector<Line> content_lines(std::string_view text, std::vector<std::string>* comments) {
    std::vector<Line> out;
    std::size_t number = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        auto fields = split(raw);
        if (fields.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (fields.front() == "c") {
            if (comments) {
                std::string_view body = raw.substr(raw.find('c') + 1);
                if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
                comments->emplace_back(body);
            }
        } else {
            out.push_back({number, raw, std::move(fields)});
        }
        if (end == text.size()) break;
    }
    return out;
}

std::uint64_t number_at(const Line& line, std::size_t k, const char* what) {
    std::string_view f = line.fields.at(k);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
    if (ec != std::errc() || ptr != f.data() + f.size())
        throw ParseError(line.number, std::string("expected a non-negative integer for ") + what + ", got '" + std::string(f) + "'");
    return value;
}

void expect_fields(const Line& line, std::size_t count, const char* form) {
    if (line.fields.size() != count) throw ParseError(line.number, std::string("expected '") + form + "'");
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
    GraphFile out;
    std::optional<std::uint64_t> n, m;
    std::size_t header_line = 0;
    std::size_t edges = 0;
    for (const Line& line : content_lines(text, &out.comments)) {
        const auto kind = line.fields.front();
        if (kind == "p") {
            if (n) throw ParseError(line.number, "duplicate header (first on line " + std::to_string(header_line) + ")");
            expect_fields(line, 4, "p edge|wedge <n> <m>");
            if (line.fields[1] == "wedge") {
                out.weights.emplace();
            } else if (line.fields[1] != "edge") {
                throw ParseError(line.number, "unknown format '" + std::string(line.fields[1]) + "'");
            }
            n = number_at(line, 2, "vertex count");
            m = number_at(line, 3, "edge count");
            if (*n > 100'000'000) throw ParseError(line.number, "vertex count too large");
            header_line = line.number;
            out.graph = MultiGraph(static_cast<std::size_t>(*n));
        } else if (kind == "e") {
            if (!n) throw ParseError(line.number, "edge before header");
            expect_fields(line, out.weighted() ? 4 : 3, out.weighted() ? "e <u> <v> <w>" : "e <u> <v>");
            const auto u = number_at(line, 1, "endpoint"), v = number_at(line, 2, "endpoint");
            if (u < 1 || u > *n || v < 1 || v > *n)
                throw ParseError(line.number, "endpoint out of range 1.." + std::to_string(*n));
            EdgeId e = out.graph.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
            if (out.weighted()) {
                const auto w = number_at(line, 3, "weight");
                if (w > static_cast<std::uint64_t>(INT64_MAX)) throw ParseError(line.number, "weight too large");
                out.weights->resize(e + 1);
                (*out.weights)[e] = static_cast<Weight>(w);
            }
            ++edges;
        } else {
            throw ParseError(line.number, "unrecognised line '" + std::string(line.text) + "'");
        }
    }
    if (!n) throw ParseError(0, "missing header");
    if (edges != *m)
        throw ParseError(header_line, "header declares " + std::to_string(*m) + " edges but " + std::to_string(edges) + " were given");
    return out;
}

namespace {

std::string graph_text(const MultiGraph& g, const std::vector<Weight>* weights, const std::vector<std::string>& comments) {
    std::ostringstream os;
    for (const auto& c : comments) os << "c " << c << '\n';
    std::vector<VertexId> rank(g.vertex_id_bound(), 0);
    VertexId r = 0;
    for (VertexId v : g.vertices()) rank[v] = ++r;
    os << "p " << (weights ? "wedge" : "edge") << ' ' << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (EdgeId e : g.edges()) {
        const Edge& ed = g.edge(e);
        os << "e " << rank[ed.a] << ' ' << rank[ed.b];
        if (weights) os << ' ' << weights->at(e);
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string write_graph(const MultiGraph& g, const std::vector<std::string>& comments) {
    return graph_text(g, nullptr, comments);
}

std::string write_weighted_graph(const MultiGraph& g, const std::vector<Weight>& weights, const std::vector<std::string>& comments) {
    return graph_text(g, &weights, comments);
}

Matching parse_matching(std::string_view text) {
    Matching m;
    std::vector<char> used;
    for (const Line& line : content_lines(text, nullptr)) {
        if (line.fields.front() != "m") throw ParseError(line.number, "unrecognised line '" + std::string(line.text) + "'");
        expect_fields(line, 3, "m <u> <v>");
        const auto u = number_at(line, 1, "vertex"), v = number_at(line, 2, "vertex");
        if (u < 1 || v < 1) throw ParseError(line.number, "vertices are numbered from 1");
        if (u == v) throw ParseError(line.number, "a pair needs two distinct vertices");
        if (u > UINT32_MAX || v > UINT32_MAX) throw ParseError(line.number, "vertex number too large");
        m.add(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    }
    return m;
}

std::string write_matching(const Matching& m) {
    std::ostringstream os;
    for (auto [u, v] : m.pairs()) os << "m " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

X3CFamily parse_x3c(std::string_view text) {
    X3CFamily fam;
    std::optional<std::uint64_t> declared;
    std::size_t header_line = 0;
    for (const Line& line : content_lines(text, nullptr)) {
        const auto kind = line.fields.front();
        if (kind == "x3c") {
            if (declared) throw ParseError(line.number, "duplicate header (first on line " + std::to_string(header_line) + ")");
            expect_fields(line, 3, "x3c <n> <t>");
            const auto n = number_at(line, 1, "universe size");
            if (n > UINT32_MAX / 2) throw ParseError(line.number, "universe too large");
            fam.universe = static_cast<std::uint32_t>(n);
            declared = number_at(line, 2, "instance count");
            header_line = line.number;
        } else if (kind == "i") {
            if (!declared) throw ParseError(line.number, "instance before header");
            expect_fields(line, 1, "i");
            fam.instances.emplace_back();
        } else if (kind == "s") {
            if (fam.instances.empty()) throw ParseError(line.number, "set before the first 'i' line");
            expect_fields(line, 4, "s <a> <b> <c>");
            std::uint32_t e[3];
            for (int k = 0; k < 3; ++k) {
                const auto x = number_at(line, k + 1, "element");
                if (x < 1 || x > fam.universe)
                    throw ParseError(line.number, "element out of range 1.." + std::to_string(fam.universe));
                e[k] = static_cast<std::uint32_t>(x);
            }
            try {
                fam.instances.back().sets.push_back(make_triple(e[0], e[1], e[2]));
            } catch (const std::invalid_argument& err) {
                throw ParseError(line.number, err.what());
            }
        } else {
            throw ParseError(line.number, "unrecognised line '" + std::string(line.text) + "'");
        }
    }
    if (!declared) throw ParseError(0, "missing header");
    if (fam.instances.size() != *declared)
        throw ParseError(header_line, "header declares " + std::to_string(*declared) + " instances but " +
                                          std::to_string(fam.instances.size()) + " were given");
    try {
        fam.validate();
    } catch (const std::invalid_argument& err) {
        throw ParseError(0, err.what());
    }
    return fam;
}

std::string write_x3c(const X3CFamily& fam, const std::vector<std::string>& comments) {
    std::ostringstream os;
    for (const auto& c : comments) os << "c " << c << '\n';
    os << "x3c " << fam.universe << ' ' << fam.instances.size() << '\n';
    for (const auto& inst : fam.instances) {
        os << "i\n";
        for (const Triple& t : inst.sets) os << "s " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace ambt
