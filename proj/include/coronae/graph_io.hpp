#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "coronae/graph.hpp"

namespace coronae {

/// Decodes one graph6 record. An optional ">>graph6<<" header and a trailing
/// newline are accepted; anything else out of place is a ParseError carrying
/// the byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes `g` as graph6, without a trailing newline.
std::string emit_graph6(const Graph& g);

/// Reads newline-separated graph6 records, skipping blank lines.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Plain edge list: "n m" on the first line, then m lines "u v" (0-indexed).
/// Blank lines and lines starting with '#' are ignored. ParseError offsets are
/// 1-based line numbers.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Chooses between edge list and graph6 by looking at the first record.
Graph parse_graph_text(std::string_view text);

}  // namespace coronae
