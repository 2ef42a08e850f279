#include <bit>
#include <cstdint>
#include <vector>

#include "lqw/graph.hpp"

namespace lqw {

bool SrgParams::feasible() const noexcept {
  if (k >= n || lambda + 1 > k) return false;
  return k * (k - lambda - 1) == (n - k - 1) * mu;
}

SrgCheck validate_strongly_regular(const Graph& g) {
  const std::size_t n = g.n_vertices();
  const std::size_t words = (n + 63) / 64;

  // Bitset rows make each common-neighbour count a popcount of ANDed words.
  std::vector<std::uint64_t> rows(n * words, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (const Vertex v : g.neighbors(u)) {
      rows[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }

  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  SrgCheck result;
  for (Vertex u = 0; u < n; ++u) {
    const std::uint64_t* ru = rows.data() + u * words;
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t* rv = rows.data() + v * words;
      std::size_t common = 0;
      for (std::size_t w = 0; w < words; ++w) {
        common += static_cast<std::size_t>(std::popcount(ru[w] & rv[w]));
      }
      const bool adjacent = (ru[v / 64] >> (v % 64)) & 1U;
      auto& seen = adjacent ? lambda : mu;
      if (!seen) {
        seen = common;
      } else if (*seen != common) {
        result.violation = SrgViolation{u, v, adjacent, common, *seen};
        return result;
      }
    }
  }
  result.params = SrgParams{n, g.degree(), lambda.value_or(0), mu.value_or(0)};
  return result;
}

}  // namespace lqw
