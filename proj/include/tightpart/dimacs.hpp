#ifndef TIGHTPART_DIMACS_HPP
#define TIGHTPART_DIMACS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "tightpart/graph.hpp"

namespace tightpart {

// DIMACS-like text format: optional `c` comment lines, one `p edge <n> <m>`
// header, then `e <u> <v>` lines with 1-based vertex ids. Blank lines are
// ignored. Library ids are 0-based; the offset lives only in this layer.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

// Canonical serialization: each edge once as `e u v` with u < v, ascending.
void write_dimacs(std::ostream& out, const Graph& g,
                  const std::vector<std::string>& comments = {});
void write_dimacs_file(const std::string& path, const Graph& g,
                       const std::vector<std::string>& comments = {});

}  // namespace tightpart

#endif
