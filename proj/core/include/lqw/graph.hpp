#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace lqw {

using Vertex = std::uint32_t;
using Slot = std::uint32_t;

enum class Family {
  kComplete,
  kCycle,
  kTorus,
  kBipartite,
  kPaley,
  kLatin,
  kTriangular,
  kJohnson,
  kHypercube,
  kCustom,
};

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view tag) noexcept;

// Upper bound on N*(d+1), the number of walk amplitudes a graph implies.
// Builders check it before allocating anything.
struct SizeLimits {
  std::size_t max_amplitudes = std::size_t{1} << 24;
};

// Immutable loopless regular graph. Adjacency lists are sorted, and for
// every directed edge (u, slot i) -> v the table inverse_slot(u, i) gives
// the slot j at v with neighbors(v)[j] == u.
//
// Copies share storage, so a Graph can be passed by value freely.
class Graph {
 public:
  // Validates regularity, symmetry, absence of self-loops and duplicates.
  // Lists need not be sorted on input.
  static Graph from_adjacency(Family family,
                              std::vector<std::vector<Vertex>> adjacency,
                              const SizeLimits& limits = {});

  std::size_t n_vertices() const noexcept { return data_->n; }
  std::size_t degree() const noexcept { return data_->d; }
  Family family() const noexcept { return data_->family; }

  // Number of (vertex, coin slot) pairs including the self-loop slot.
  std::size_t amplitude_count() const noexcept {
    return data_->n * (data_->d + 1);
  }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {data_->adjacency.data() + std::size_t{v} * data_->d, data_->d};
  }
  std::span<const Slot> inverse_slots(Vertex v) const noexcept {
    return {data_->inverse.data() + std::size_t{v} * data_->d, data_->d};
  }
  Slot inverse_slot(Vertex u, Slot i) const noexcept {
    return data_->inverse[std::size_t{u} * data_->d + i];
  }

  bool adjacent(Vertex u, Vertex v) const noexcept;

 private:
  struct Storage {
    std::size_t n = 0;
    std::size_t d = 0;
    Family family = Family::kCustom;
    std::vector<Vertex> adjacency;  // n * d, row-major
    std::vector<Slot> inverse;      // n * d, row-major
  };

  explicit Graph(std::shared_ptr<const Storage> data) : data_(std::move(data)) {}

  std::shared_ptr<const Storage> data_;
};

bool operator==(const Graph& a, const Graph& b);

// Builders. All use canonical deterministic labelings: integers, row-major
// coordinates, lexicographically ordered subsets, bit strings.
Graph build_complete(std::size_t n, const SizeLimits& limits = {});
Graph build_cycle(std::size_t n, const SizeLimits& limits = {});
Graph build_torus_lattice(std::size_t dimension, std::size_t side,
                          const SizeLimits& limits = {});
Graph build_complete_bipartite_regular(std::size_t n,
                                       const SizeLimits& limits = {});
Graph build_paley(std::size_t q, const SizeLimits& limits = {});
Graph build_latin_square(std::size_t order, const SizeLimits& limits = {});
Graph build_triangular(std::size_t m, const SizeLimits& limits = {});
Graph build_johnson(std::size_t n, std::size_t k,
                    const SizeLimits& limits = {});
Graph build_hypercube(std::size_t n, const SizeLimits& limits = {});

struct SrgParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;

  // k(k - lambda - 1) == (n - k - 1) mu
  bool feasible() const noexcept;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

struct SrgViolation {
  Vertex u = 0;
  Vertex v = 0;
  bool adjacent = false;
  std::size_t common = 0;    // common neighbours of (u, v)
  std::size_t expected = 0;  // count seen on the first pair of the same class
};

struct SrgCheck {
  std::optional<SrgParams> params;
  std::optional<SrgViolation> violation;

  bool strongly_regular() const noexcept { return params.has_value(); }
};

// Exhaustive count of common neighbours over all unordered vertex pairs.
// A complete graph has no non-adjacent pairs and reports mu = 0.
SrgCheck validate_strongly_regular(const Graph& g);

// Plain-text edge list: header "N d family_tag", then one "u v" line per
// undirected edge with u < v, ascending.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in, const SizeLimits& limits = {});

}  // namespace lqw
