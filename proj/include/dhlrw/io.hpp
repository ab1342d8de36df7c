#pragma once

#include <iosfwd>
#include <string>

#include "dhlrw/graph.hpp"
#include "dhlrw/matroid.hpp"

namespace dhlrw {

// "graph <n>" header, then "u v" edge lines; '#' starts a comment
Graph parse_graph(const std::string& text);
void write_graph(std::ostream& os, const Graph& g);
// "matroid <rank> <nelems>" header, then one row of 0/1 digits per matrix row
BinaryMatroid parse_matrix(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace dhlrw
