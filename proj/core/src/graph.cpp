#include "lqw/graph.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "lqw/error.hpp"

namespace lqw {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidSize: return "invalid-size";
    case ErrorCode::kInvalidParameter: return "invalid-parameter";
    case ErrorCode::kUnsupportedModulus: return "unsupported-modulus";
    case ErrorCode::kAsymmetricAdjacency: return "asymmetric-adjacency";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kNotRegular: return "not-regular";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kInvalidConfig: return "invalid-config";
    case ErrorCode::kDegenerateParameter: return "degenerate-parameter";
    case ErrorCode::kInvalidInput: return "invalid-input";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kFamilyTags{{
    {Family::kComplete, "complete"},
    {Family::kCycle, "cycle"},
    {Family::kTorus, "torus"},
    {Family::kBipartite, "bipartite"},
    {Family::kPaley, "paley"},
    {Family::kLatin, "latin"},
    {Family::kTriangular, "triangular"},
    {Family::kJohnson, "johnson"},
    {Family::kHypercube, "hypercube"},
    {Family::kCustom, "custom"},
}};

}  // namespace

std::string_view to_string(Family family) noexcept {
  for (const auto& [f, tag] : kFamilyTags) {
    if (f == family) return tag;
  }
  return "custom";
}

std::optional<Family> parse_family(std::string_view tag) noexcept {
  for (const auto& [f, name] : kFamilyTags) {
    if (name == tag) return f;
  }
  return std::nullopt;
}

Graph Graph::from_adjacency(Family family,
                            std::vector<std::vector<Vertex>> adjacency,
                            const SizeLimits& limits) {
  const std::size_t n = adjacency.size();
  if (n == 0) throw Error(ErrorCode::kInvalidSize, "graph has no vertices");
  const std::size_t d = adjacency.front().size();
  if (d == 0) throw Error(ErrorCode::kInvalidSize, "graph has no edges");
  if (n > limits.max_amplitudes / (d + 1)) {
    throw Error(ErrorCode::kTooLarge,
                "graph needs " + std::to_string(n) + "*" + std::to_string(d + 1) +
                    " amplitudes, above the cap of " +
                    std::to_string(limits.max_amplitudes));
  }

  auto storage = std::make_shared<Storage>();
  storage->n = n;
  storage->d = d;
  storage->family = family;
  storage->adjacency.resize(n * d);
  storage->inverse.resize(n * d);

  for (std::size_t u = 0; u < n; ++u) {
    auto& row = adjacency[u];
    if (row.size() != d) {
      throw Error(ErrorCode::kNotRegular,
                  "vertex " + std::to_string(u) + " has degree " +
                      std::to_string(row.size()) + ", expected " +
                      std::to_string(d));
    }
    std::sort(row.begin(), row.end());
    for (std::size_t i = 0; i < d; ++i) {
      if (row[i] >= n) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "neighbour " + std::to_string(row[i]) + " of vertex " +
                        std::to_string(u) + " out of range");
      }
      if (row[i] == u) {
        throw Error(ErrorCode::kInvalidInput,
                    "self-loop at vertex " + std::to_string(u));
      }
      if (i > 0 && row[i] == row[i - 1]) {
        throw Error(ErrorCode::kInvalidInput,
                    "duplicate edge " + std::to_string(u) + "-" +
                        std::to_string(row[i]));
      }
    }
    std::copy(row.begin(), row.end(), storage->adjacency.begin() + u * d);
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < d; ++i) {
      const Vertex v = storage->adjacency[u * d + i];
      const auto first = storage->adjacency.begin() + std::size_t{v} * d;
      const auto last = first + d;
      const auto it = std::lower_bound(first, last, static_cast<Vertex>(u));
      if (it == last || *it != u) {
        throw Error(ErrorCode::kAsymmetricAdjacency,
                    "edge " + std::to_string(u) + "->" + std::to_string(v) +
                        " has no reverse");
      }
      storage->inverse[u * d + i] = static_cast<Slot>(it - first);
    }
  }

  return Graph(std::move(storage));
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  if (u >= n_vertices()) return false;
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_vertices() != b.n_vertices() || a.degree() != b.degree()) {
    return false;
  }
  for (Vertex v = 0; v < a.n_vertices(); ++v) {
    const auto ra = a.neighbors(v);
    const auto rb = b.neighbors(v);
    if (!std::equal(ra.begin(), ra.end(), rb.begin())) return false;
  }
  return true;
}

}  // namespace lqw
