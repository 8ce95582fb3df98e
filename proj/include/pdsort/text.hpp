#pragma once

// Text and Graphviz I/O for diagrams.
//
// Grammar (whitespace ignored):
//   diagram := '{' [ block ( '|' block )* ] '}'
//   block   := node ( ',' node )*
//   node    := INT          top node
//            | INT '\''     bottom node
//            | '-' INT      bottom node (alternate notation)
// Singleton blocks may be omitted; the order must be supplied by the caller.

#include <string>
#include <string_view>

#include "pdsort/diagram.hpp"

namespace pdsort {

PartitionDiagram parse_diagram(std::string_view text, int order);

// Canonical text: every block, singletons included, in canonical order;
// top indices then bottom indices inside a block.
std::string format_diagram(const PartitionDiagram& d);

std::string format_block(const Block& b);

// Two ranked rows of circle nodes; each block drawn as a chain through its
// nodes in storage order.
std::string to_dot(const PartitionDiagram& d, std::string_view graph_name = "diagram");

}  // namespace pdsort
