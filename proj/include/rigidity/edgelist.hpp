#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

// Text format: optional '#' comment lines, a header "n m", then m lines
// "u v" with 0 <= u < v < n. Duplicate edges and self-loops are rejected
// with line-numbered errors.
Graph read_edgelist(std::istream& in);
Graph read_edgelist_file(const std::string& path);

void write_edgelist(const Graph& g, std::ostream& out,
                    const std::vector<std::string>& header_comments = {});
void write_edgelist_file(const Graph& g, const std::string& path,
                         const std::vector<std::string>& header_comments = {});

}  // namespace rigidity
