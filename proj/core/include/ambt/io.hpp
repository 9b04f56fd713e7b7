#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ambt/graph.hpp"
#include "ambt/matching.hpp"
#include "ambt/weighted_matching.hpp"
#include "ambt/x3c.hpp"

// Text formats. Files use 1-based vertex numbers; in memory vertex i of a
// file is id i-1. Lines starting with "c " (or a bare "c") are comments and
// blank lines are ignored.
//
//   graph     p edge <n> <m>     then m lines  e <u> <v>
//   weighted  p wedge <n> <m>    then m lines  e <u> <v> <w>
//   matching  m <u> <v>          one line per pair
//   X3C       x3c <n> <t>        then per instance a line "i" followed by
//                                lines  s <a> <b> <c>
//
// Every parser throws ParseError carrying the offending line number.

namespace ambt {

struct GraphFile {
    MultiGraph graph;
    /// Present for "p wedge" files; indexed by edge id (edge k of the file is id k-1).
    std::optional<std::vector<Weight>> weights;
    std::vector<std::string> comments;  // text after "c "

    bool weighted() const { return weights.has_value(); }
};

GraphFile parse_graph(std::string_view text);

/// Vertices are written by rank, so a graph with id gaps is renumbered.
std::string write_graph(const MultiGraph& g, const std::vector<std::string>& comments = {});
std::string write_weighted_graph(const MultiGraph& g, const std::vector<Weight>& weights,
                                 const std::vector<std::string>& comments = {});

Matching parse_matching(std::string_view text);
std::string write_matching(const Matching& m);

/// Parses and validates a family (see X3CFamily::validate).
X3CFamily parse_x3c(std::string_view text);
std::string write_x3c(const X3CFamily& fam, const std::vector<std::string>& comments = {});

/// Whole file as a string; throws std::runtime_error if it cannot be read.
std::string read_file(const std::string& path);

}  // namespace ambt
