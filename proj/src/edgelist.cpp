#include "rigidity/edgelist.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rigidity/errors.hpp"

namespace rigidity {

Graph read_edgelist(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ss(line);
    if (n < 0) {
      if (!(ss >> n >> m) || n < 0 || m < 0)
        throw ParseError(lineno, "expected header \"n m\"");
      continue;
    }
    long long u, v;
    if (!(ss >> u >> v)) throw ParseError(lineno, "expected edge \"u v\"");
    std::string rest;
    if (ss >> rest) throw ParseError(lineno, "trailing tokens after edge");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(lineno, "vertex id out of range");
    std::pair<int, int> e{int(std::min(u, v)), int(std::max(u, v))};
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(lineno, "missing header");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lineno, "edge count does not match header");
  return Graph(int(n), std::move(edges));
}

Graph read_edgelist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_edgelist(in);
}

void write_edgelist(const Graph& g, std::ostream& out,
                    const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << "# " << c << "\n";
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edgelist_file(const Graph& g, const std::string& path,
                         const std::vector<std::string>& header_comments) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_edgelist(g, out, header_comments);
}

}  // namespace rigidity
