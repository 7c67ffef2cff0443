#ifndef TORICODE_SPECS_HPP
#define TORICODE_SPECS_HPP

#include <iosfwd>
#include <string>

#include "toricode/graph.hpp"
#include "toricode/toric_set.hpp"

namespace toricode {

// Graph spec strings: "cycle:N" (N vertices), "path:N" (N edges),
// "kbip:A,B", or "@file" for an edge list on disk.
Graph parse_graph_spec(const std::string& spec);

// Edge-list format: first line "n s", then s lines "i j".
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

// Field spec strings: "p^e" or a plain prime power "q".
FieldPtr parse_field_spec(const std::string& spec);

}  // namespace toricode

#endif
