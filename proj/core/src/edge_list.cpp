#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "lqw/error.hpp"
#include "lqw/graph.hpp"

namespace lqw {

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n_vertices() << ' ' << g.degree() << ' ' << to_string(g.family())
      << '\n';
  for (Vertex u = 0; u < g.n_vertices(); ++u) {
    for (const Vertex v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

Graph read_edge_list(std::istream& in, const SizeLimits& limits) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kInvalidInput, "edge list is empty");
  }
  std::istringstream header(line);
  std::size_t n = 0;
  std::size_t d = 0;
  std::string tag;
  if (!(header >> n >> d >> tag)) {
    throw Error(ErrorCode::kInvalidInput, "malformed edge list header: " + line);
  }
  const auto family = parse_family(tag);
  if (!family) throw Error(ErrorCode::kInvalidInput, "unknown family tag " + tag);
  if (n == 0 || d == 0 || d >= n || n > limits.max_amplitudes / (d + 1)) {
    throw Error(ErrorCode::kInvalidInput, "edge list header out of range: " + line);
  }

  std::vector<std::vector<Vertex>> adj(n);
  std::size_t edges = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::size_t u = 0;
    std::size_t v = 0;
    if (!(row >> u >> v) || u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidInput,
                  "bad edge on line " + std::to_string(line_no) + ": " + line);
    }
    adj[u].push_back(static_cast<Vertex>(v));
    adj[v].push_back(static_cast<Vertex>(u));
    ++edges;
  }
  if (edges * 2 != n * d) {
    throw Error(ErrorCode::kNotRegular,
                "edge count " + std::to_string(edges) + " does not match N*d/2");
  }
  Graph g = Graph::from_adjacency(*family, std::move(adj), limits);
  if (g.degree() != d) {
    throw Error(ErrorCode::kNotRegular, "degree does not match header");
  }
  return g;
}

}  // namespace lqw
