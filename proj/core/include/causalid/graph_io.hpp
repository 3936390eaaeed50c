#ifndef CAUSALID_GRAPH_IO_HPP
#define CAUSALID_GRAPH_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "causalid/graph.hpp"

namespace causalid {

// Graph file format, one statement per line:
//
//   # comment (also allowed after a statement)
//   node <name>          declaration order is the tie-break order
//   <a> -> <b>           directed edge
//   <a> <-> <b>          bidirected edge
//
// Names match [A-Za-z_][A-Za-z0-9_]*. Anything else is a ParseError that
// carries the offending line number.

Admg parse_graph(std::string_view text);
Admg read_graph_file(const std::filesystem::path& path);

/// Canonical text: nodes, then directed edges, then bidirected edges.
std::string serialize_graph(const Admg& g);

bool is_valid_name(std::string_view name);

}  // namespace causalid

#endif  // CAUSALID_GRAPH_IO_HPP
