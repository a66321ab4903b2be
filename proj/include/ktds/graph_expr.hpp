#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ktds/graph.hpp"

namespace ktds {

/// Parses a graph expression.
///
///   expr  := term ('x' term)*          Cartesian product, left-associative
///   term  := 'K' int | 'C' int | 'P'   complete graph, cycle, Petersen graph
///          | 'star(' expr ',' int ')'  G* construction with that many pendants per vertex
///          | '(' expr ')'
///          | '@' path                  edge-list file; the path runs to the next ',' or ')'
///                                      or the end of the text
///
/// Whitespace between tokens is ignored. Errors throw ParseError carrying the offset, or
/// InvalidArgument when a generator rejects its parameter (e.g. C2).
Graph parse_graph_expr(std::string_view text);

/// Edge-list format: first line `n`, then one `u v` pair per line, 0-indexed and
/// whitespace-separated. Duplicate and reversed edges are merged.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& file);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace ktds
