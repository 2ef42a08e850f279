#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "lqw/error.hpp"
#include "lqw/graph.hpp"

namespace lqw {
namespace {

using AdjacencyLists = std::vector<std::vector<Vertex>>;

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Rejects (n, d) before any allocation happens.
void check_size(std::string_view what, std::size_t n, std::size_t d,
                const SizeLimits& limits) {
  if (n == kSaturated || d == kSaturated ||
      saturating_mul(n, d + 1) > limits.max_amplitudes) {
    throw Error(ErrorCode::kTooLarge,
                std::string(what) + " exceeds the amplitude cap of " +
                    std::to_string(limits.max_amplitudes));
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const std::size_t num = n - k + i;
    if (result > kSaturated / num) return kSaturated;
    result = result * num / i;
  }
  return result;
}

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

}  // namespace

Graph build_complete(std::size_t n, const SizeLimits& limits) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidSize, "complete graph needs n >= 2");
  }
  check_size("complete graph", n, n - 1, limits);
  AdjacencyLists adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    adj[u].reserve(n - 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (v != u) adj[u].push_back(static_cast<Vertex>(v));
    }
  }
  return Graph::from_adjacency(Family::kComplete, std::move(adj), limits);
}

Graph build_cycle(std::size_t n, const SizeLimits& limits) {
  if (n < 3) throw Error(ErrorCode::kInvalidSize, "cycle needs n >= 3");
  check_size("cycle", n, 2, limits);
  AdjacencyLists adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    adj[u] = {static_cast<Vertex>((u + n - 1) % n),
              static_cast<Vertex>((u + 1) % n)};
  }
  return Graph::from_adjacency(Family::kCycle, std::move(adj), limits);
}

Graph build_torus_lattice(std::size_t dimension, std::size_t side,
                          const SizeLimits& limits) {
  if (dimension < 1) {
    throw Error(ErrorCode::kInvalidParameter, "lattice dimension must be >= 1");
  }
  // side 2 would merge the +1 and -1 neighbours.
  if (side < 3) throw Error(ErrorCode::kInvalidSize, "lattice side must be >= 3");
  std::size_t n = 1;
  for (std::size_t i = 0; i < dimension; ++i) n = saturating_mul(n, side);
  check_size("torus lattice", n, 2 * dimension, limits);

  AdjacencyLists adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    adj[u].reserve(2 * dimension);
    std::size_t stride = 1;
    for (std::size_t axis = 0; axis < dimension; ++axis) {
      const std::size_t coord = (u / stride) % side;
      const std::size_t base = u - coord * stride;
      adj[u].push_back(static_cast<Vertex>(base + ((coord + 1) % side) * stride));
      adj[u].push_back(
          static_cast<Vertex>(base + ((coord + side - 1) % side) * stride));
      stride *= side;
    }
  }
  return Graph::from_adjacency(dimension == 1 ? Family::kCycle : Family::kTorus,
                               std::move(adj), limits);
}

Graph build_complete_bipartite_regular(std::size_t n, const SizeLimits& limits) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorCode::kInvalidSize,
                "regular complete bipartite graph needs even n >= 4");
  }
  const std::size_t half = n / 2;
  check_size("complete bipartite graph", n, half, limits);
  AdjacencyLists adj(n);
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t other = u < half ? half : 0;
    adj[u].reserve(half);
    for (std::size_t v = other; v < other + half; ++v) {
      adj[u].push_back(static_cast<Vertex>(v));
    }
  }
  return Graph::from_adjacency(Family::kBipartite, std::move(adj), limits);
}

Graph build_paley(std::size_t q, const SizeLimits& limits) {
  if (!is_prime(q)) {
    throw Error(ErrorCode::kUnsupportedModulus,
                "Paley graphs are built over prime moduli only; " +
                    std::to_string(q) + " is not prime");
  }
  if (q % 4 != 1) {
    throw Error(ErrorCode::kAsymmetricAdjacency,
                "Paley modulus must be 1 mod 4 for symmetric adjacency; got " +
                    std::to_string(q));
  }
  check_size("Paley graph", q, (q - 1) / 2, limits);

  std::vector<bool> residue(q, false);
  for (std::size_t x = 1; x < q; ++x) residue[(x * x) % q] = true;

  AdjacencyLists adj(q);
  for (std::size_t u = 0; u < q; ++u) {
    adj[u].reserve((q - 1) / 2);
    for (std::size_t v = 0; v < q; ++v) {
      if (v != u && residue[(u + q - v) % q]) {
        adj[u].push_back(static_cast<Vertex>(v));
      }
    }
  }
  return Graph::from_adjacency(Family::kPaley, std::move(adj), limits);
}

Graph build_latin_square(std::size_t order, const SizeLimits& limits) {
  if (order < 2) {
    throw Error(ErrorCode::kInvalidSize, "Latin square order must be >= 2");
  }
  const std::size_t n = saturating_mul(order, order);
  check_size("Latin square graph", n, 3 * (order - 1), limits);

  // Cyclic square: cell (r, c) carries symbol (r + c) mod order.
  AdjacencyLists adj(n);
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) {
      auto& row = adj[r * order + c];
      row.reserve(3 * (order - 1));
      for (std::size_t x = 0; x < order; ++x) {
        if (x != c) row.push_back(static_cast<Vertex>(r * order + x));
        if (x != r) row.push_back(static_cast<Vertex>(x * order + c));
        if (x != r) {
          // Same symbol in row x sits at column (r + c - x) mod order.
          const std::size_t col = (r + c + order - x) % order;
          row.push_back(static_cast<Vertex>(x * order + col));
        }
      }
    }
  }
  return Graph::from_adjacency(Family::kLatin, std::move(adj), limits);
}

Graph build_triangular(std::size_t m, const SizeLimits& limits) {
  if (m < 4) throw Error(ErrorCode::kInvalidSize, "triangular graph needs m >= 4");
  Graph j = build_johnson(m, 2, limits);
  std::vector<std::vector<Vertex>> adj(j.n_vertices());
  for (Vertex v = 0; v < j.n_vertices(); ++v) {
    const auto row = j.neighbors(v);
    adj[v].assign(row.begin(), row.end());
  }
  return Graph::from_adjacency(Family::kTriangular, std::move(adj), limits);
}

Graph build_johnson(std::size_t n, std::size_t k, const SizeLimits& limits) {
  if (k < 1 || k + 1 > n) {
    throw Error(ErrorCode::kInvalidParameter,
                "Johnson graph needs 1 <= k <= n-1; got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
  }
  if (n > 63) {
    throw Error(ErrorCode::kTooLarge, "Johnson graph symbol count above 63");
  }
  const std::size_t count = binomial(n, k);
  check_size("Johnson graph", count, k * (n - k), limits);

  // Bit i set when symbol i is in the subset. Enumeration is lexicographic
  // over the sorted element lists.
  std::vector<std::uint64_t> masks;
  masks.reserve(count);
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    std::uint64_t mask = 0;
    for (const std::size_t s : pick) mask |= std::uint64_t{1} << s;
    masks.push_back(mask);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::unordered_map<std::uint64_t, Vertex> rank;
  rank.reserve(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    rank.emplace(masks[i], static_cast<Vertex>(i));
  }

  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  AdjacencyLists adj(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const std::uint64_t s = masks[i];
    auto& row = adj[i];
    row.reserve(k * (n - k));
    for (std::uint64_t in = s; in != 0; in &= in - 1) {
      const std::uint64_t drop = in & (~in + 1);
      for (std::uint64_t out = all & ~s; out != 0; out &= out - 1) {
        const std::uint64_t add = out & (~out + 1);
        row.push_back(rank.at((s & ~drop) | add));
      }
    }
  }
  return Graph::from_adjacency(Family::kJohnson, std::move(adj), limits);
}

Graph build_hypercube(std::size_t n, const SizeLimits& limits) {
  if (n < 1) throw Error(ErrorCode::kInvalidSize, "hypercube needs n >= 1");
  if (n >= 40) throw Error(ErrorCode::kTooLarge, "hypercube dimension too large");
  const std::size_t count = std::size_t{1} << n;
  check_size("hypercube", count, n, limits);
  AdjacencyLists adj(count);
  for (std::size_t u = 0; u < count; ++u) {
    adj[u].reserve(n);
    for (std::size_t b = 0; b < n; ++b) {
      adj[u].push_back(static_cast<Vertex>(u ^ (std::size_t{1} << b)));
    }
  }
  return Graph::from_adjacency(Family::kHypercube, std::move(adj), limits);
}

}  // namespace lqw
