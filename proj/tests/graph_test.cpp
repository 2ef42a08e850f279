#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

#include "lqw/error.hpp"
#include "lqw/graph.hpp"
#include "test_util.hpp"

namespace lqw {
namespace {

using testing::isomorphic;
using testing::small_graphs;

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected lqw::Error";
  return ErrorCode::kIo;
}

void expect_invariants(const Graph& g) {
  const std::size_t n = g.n_vertices();
  const std::size_t d = g.degree();
  for (Vertex u = 0; u < n; ++u) {
    const auto nu = g.neighbors(u);
    ASSERT_EQ(nu.size(), d);
    EXPECT_TRUE(std::is_sorted(nu.begin(), nu.end()));
    EXPECT_EQ(std::adjacent_find(nu.begin(), nu.end()), nu.end());
    for (Slot i = 0; i < d; ++i) {
      const Vertex v = nu[i];
      ASSERT_LT(v, n);
      EXPECT_NE(v, u);
      EXPECT_TRUE(g.adjacent(v, u));
      const Slot j = g.inverse_slot(u, i);
      ASSERT_LT(j, d);
      EXPECT_EQ(g.neighbors(v)[j], u);
      EXPECT_EQ(g.inverse_slot(v, j), i);
    }
  }
}

TEST(Builders, CompleteGraphs) {
  const Graph k5 = build_complete(5);
  EXPECT_EQ(k5.n_vertices(), 5u);
  EXPECT_EQ(k5.degree(), 4u);
  EXPECT_EQ(k5.family(), Family::kComplete);
  const Graph k1024 = build_complete(1024);
  EXPECT_EQ(k1024.degree(), 1023u);
  EXPECT_EQ(k1024.amplitude_count(), 1024u * 1024u);
  EXPECT_EQ(error_of([] { build_complete(1); }), ErrorCode::kInvalidSize);
  EXPECT_EQ(error_of([] { build_complete(0); }), ErrorCode::kInvalidSize);
}

TEST(Builders, CycleAndTorus) {
  const Graph c3 = build_cycle(3);
  EXPECT_EQ(c3.degree(), 2u);
  EXPECT_EQ(c3, build_complete(3));
  EXPECT_EQ(error_of([] { build_cycle(2); }), ErrorCode::kInvalidSize);

  const Graph t = build_torus_lattice(2, 32);
  EXPECT_EQ(t.n_vertices(), 1024u);
  EXPECT_EQ(t.degree(), 4u);
  EXPECT_EQ(build_torus_lattice(3, 10).n_vertices(), 1000u);
  EXPECT_EQ(build_torus_lattice(3, 10).degree(), 6u);
  EXPECT_EQ(build_torus_lattice(5, 4).degree(), 10u);
  EXPECT_EQ(error_of([] { build_torus_lattice(2, 2); }), ErrorCode::kInvalidSize);
  EXPECT_EQ(error_of([] { build_torus_lattice(0, 5); }),
            ErrorCode::kInvalidParameter);

  for (std::size_t n = 3; n <= 40; ++n) {
    EXPECT_EQ(build_torus_lattice(1, n), build_cycle(n)) << n;
  }
}

TEST(Builders, Bipartite) {
  const Graph g = build_complete_bipartite_regular(1024);
  EXPECT_EQ(g.degree(), 512u);
  EXPECT_EQ(error_of([] { build_complete_bipartite_regular(7); }),
            ErrorCode::kInvalidSize);
  EXPECT_EQ(error_of([] { build_complete_bipartite_regular(2); }),
            ErrorCode::kInvalidSize);
  EXPECT_TRUE(isomorphic(build_complete_bipartite_regular(4), build_cycle(4)));

  // Two-colourable with colour classes equal to the halves.
  const Graph h = build_complete_bipartite_regular(12);
  for (Vertex u = 0; u < 12; ++u) {
    for (const Vertex v : h.neighbors(u)) EXPECT_NE(u < 6, v < 6);
  }
}

TEST(Builders, Paley) {
  const Graph p = build_paley(1009);
  EXPECT_EQ(p.n_vertices(), 1009u);
  EXPECT_EQ(p.degree(), 504u);
  EXPECT_EQ(build_paley(5), build_cycle(5));
  EXPECT_EQ(error_of([] { build_paley(7); }), ErrorCode::kAsymmetricAdjacency);
  EXPECT_EQ(error_of([] { build_paley(9); }), ErrorCode::kUnsupportedModulus);
  EXPECT_EQ(error_of([] { build_paley(15); }), ErrorCode::kUnsupportedModulus);
  EXPECT_EQ(error_of([] { build_paley(1); }), ErrorCode::kUnsupportedModulus);
}

TEST(Builders, LatinSquare) {
  const Graph g = build_latin_square(32);
  EXPECT_EQ(g.n_vertices(), 1024u);
  EXPECT_EQ(g.degree(), 93u);
  EXPECT_EQ(build_latin_square(2), build_complete(4));
  EXPECT_EQ(error_of([] { build_latin_square(1); }), ErrorCode::kInvalidSize);
}

TEST(Builders, TriangularAndJohnson) {
  const Graph t = build_triangular(46);
  EXPECT_EQ(t.n_vertices(), 1035u);
  EXPECT_EQ(t.degree(), 88u);
  EXPECT_EQ(t.family(), Family::kTriangular);
  EXPECT_EQ(error_of([] { build_triangular(3); }), ErrorCode::kInvalidSize);

  EXPECT_EQ(build_triangular(4).n_vertices(), 6u);
  EXPECT_EQ(build_triangular(4).degree(), 4u);

  EXPECT_EQ(build_johnson(12, 4).n_vertices(), 495u);
  EXPECT_EQ(build_johnson(12, 4).degree(), 32u);
  EXPECT_EQ(build_johnson(12, 5).n_vertices(), 792u);
  EXPECT_EQ(build_johnson(12, 5).degree(), 35u);
  EXPECT_EQ(build_johnson(12, 6).n_vertices(), 924u);
  EXPECT_EQ(build_johnson(12, 6).degree(), 36u);

  for (std::size_t n = 4; n <= 12; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const Graph j = build_johnson(n, k);
      EXPECT_EQ(j.n_vertices(), binomial(n, k)) << n << "," << k;
      EXPECT_EQ(j.degree(), k * (n - k)) << n << "," << k;
    }
    EXPECT_EQ(build_johnson(n, 1), build_complete(n));
  }
  for (std::size_t m = 4; m <= 12; ++m) {
    EXPECT_EQ(build_triangular(m), build_johnson(m, 2)) << m;
  }
  EXPECT_EQ(error_of([] { build_johnson(5, 0); }), ErrorCode::kInvalidParameter);
  EXPECT_EQ(error_of([] { build_johnson(5, 5); }), ErrorCode::kInvalidParameter);
}

TEST(Builders, JohnsonAdjacencyIsOneSymbolSwap) {
  const Graph g = build_johnson(7, 3);
  // Rebuild subsets in lexicographic order and check adjacency directly.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << 7); ++m) {
    if (std::popcount(m) == 3) masks.push_back(m);
  }
  auto lex_less = [](std::uint32_t a, std::uint32_t b) {
    for (int i = 0; i < 7; ++i) {
      const bool ia = (a >> i) & 1u, ib = (b >> i) & 1u;
      if (ia != ib) return ia;  // earlier smallest element sorts first
    }
    return false;
  };
  std::sort(masks.begin(), masks.end(), lex_less);
  ASSERT_EQ(masks.size(), g.n_vertices());
  for (Vertex u = 0; u < masks.size(); ++u) {
    for (Vertex v = 0; v < masks.size(); ++v) {
      const bool expected = std::popcount(masks[u] & masks[v]) == 2;
      EXPECT_EQ(g.adjacent(u, v), expected) << u << " " << v;
    }
  }
}

TEST(Builders, Hypercube) {
  const Graph q = build_hypercube(10);
  EXPECT_EQ(q.n_vertices(), 1024u);
  EXPECT_EQ(q.degree(), 10u);
  for (Vertex u = 0; u < 1024; ++u) {
    for (const Vertex v : q.neighbors(u)) EXPECT_EQ(std::popcount(u ^ v), 1);
  }
  EXPECT_EQ(build_hypercube(1), Graph::from_adjacency(Family::kCustom, {{1}, {0}}));
  EXPECT_TRUE(isomorphic(build_hypercube(2), build_cycle(4)));

  // Q4 is C4 x C4: Gray-code each torus coordinate into two bits.
  const Graph q4 = build_hypercube(4);
  const Graph t44 = build_torus_lattice(2, 4);
  const Vertex gray[4] = {0b00, 0b01, 0b11, 0b10};
  auto image = [&](Vertex v) { return Vertex(gray[v / 4] << 2 | gray[v % 4]); };
  for (Vertex u = 0; u < 16; ++u) {
    for (Vertex v = 0; v < 16; ++v) {
      EXPECT_EQ(t44.adjacent(u, v), q4.adjacent(image(u), image(v)));
    }
  }
  EXPECT_EQ(error_of([] { build_hypercube(0); }), ErrorCode::kInvalidSize);
  EXPECT_EQ(error_of([] { build_hypercube(40); }), ErrorCode::kTooLarge);
}

TEST(Builders, SizeCapCheckedBeforeAllocation) {
  const SizeLimits tiny{100};
  EXPECT_EQ(error_of([&] { build_complete(11, tiny); }), ErrorCode::kTooLarge);
  EXPECT_NO_THROW(build_complete(10, tiny));  // exactly 10 * 10 amplitudes
  EXPECT_EQ(error_of([&] { build_cycle(40, tiny); }), ErrorCode::kTooLarge);
  EXPECT_EQ(error_of([&] { build_torus_lattice(3, 10, tiny); }),
            ErrorCode::kTooLarge);
  EXPECT_EQ(error_of([&] { build_johnson(60, 30, tiny); }), ErrorCode::kTooLarge);
  EXPECT_EQ(error_of([&] { build_hypercube(30); }), ErrorCode::kTooLarge);
  EXPECT_EQ(error_of([] { build_complete(std::size_t{1} << 40); }),
            ErrorCode::kTooLarge);
  EXPECT_EQ(error_of([] { build_torus_lattice(60, 1000); }), ErrorCode::kTooLarge);
}

TEST(Invariants, HoldForEverySmallInstance) {
  for (std::size_t n = 2; n <= 40; ++n) expect_invariants(build_complete(n));
  for (std::size_t n = 3; n <= 64; ++n) expect_invariants(build_cycle(n));
  for (std::size_t dim = 1; dim <= 4; ++dim) {
    for (std::size_t side = 3; side <= 6; ++side) {
      expect_invariants(build_torus_lattice(dim, side));
    }
  }
  for (std::size_t n = 4; n <= 40; n += 2) {
    expect_invariants(build_complete_bipartite_regular(n));
  }
  for (std::size_t q : {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101}) {
    expect_invariants(build_paley(q));
  }
  for (std::size_t o = 2; o <= 12; ++o) expect_invariants(build_latin_square(o));
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::size_t k = 1; k < n; ++k) expect_invariants(build_johnson(n, k));
  }
  for (std::size_t dim = 1; dim <= 10; ++dim) expect_invariants(build_hypercube(dim));
}

TEST(Invariants, TorusAdjacencyMatchesCoordinates) {
  const std::size_t side = 5;
  const Graph g = build_torus_lattice(3, side);
  auto coord = [&](Vertex v, int axis) {
    for (int i = 0; i < 2 - axis; ++i) v /= side;
    return v % side;
  };
  for (Vertex u = 0; u < g.n_vertices(); ++u) {
    for (Vertex v = 0; v < g.n_vertices(); ++v) {
      int differing = 0;
      bool unit_step = true;
      for (int a = 0; a < 3; ++a) {
        const auto cu = coord(u, a), cv = coord(v, a);
        if (cu == cv) continue;
        ++differing;
        const auto diff = (cu + side - cv) % side;
        unit_step = unit_step && (diff == 1 || diff == side - 1);
      }
      EXPECT_EQ(g.adjacent(u, v), differing == 1 && unit_step);
    }
  }
}

TEST(FromAdjacency, RejectsMalformedInput) {
  using Adj = std::vector<std::vector<Vertex>>;
  EXPECT_EQ(error_of([] { Graph::from_adjacency(Family::kCustom, Adj{{1}, {0, 2}, {1}}); }),
            ErrorCode::kNotRegular);
  EXPECT_EQ(error_of([] { Graph::from_adjacency(Family::kCustom, Adj{{1}, {2}, {0}}); }),
            ErrorCode::kAsymmetricAdjacency);
  EXPECT_EQ(error_of([] { Graph::from_adjacency(Family::kCustom, Adj{{0}, {1}}); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(error_of([] { Graph::from_adjacency(Family::kCustom, Adj{{1, 1}, {0, 0}}); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(error_of([] { Graph::from_adjacency(Family::kCustom, Adj{{5}, {0}}); }),
            ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(error_of([] { Graph::from_adjacency(Family::kCustom, Adj{}); }),
            ErrorCode::kInvalidSize);
}

TEST(FromAdjacency, SortsListsAndBuildsInverseTable) {
  const Graph g =
      Graph::from_adjacency(Family::kCustom, {{3, 1}, {0, 2}, {3, 1}, {2, 0}});
  EXPECT_EQ(g, build_cycle(4));
  expect_invariants(g);
}

TEST(FamilyTags, RoundTrip) {
  for (const Family f : {Family::kComplete, Family::kCycle, Family::kTorus,
                         Family::kBipartite, Family::kPaley, Family::kLatin,
                         Family::kTriangular, Family::kJohnson,
                         Family::kHypercube, Family::kCustom}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_FALSE(parse_family("petersen").has_value());
}

TEST(EdgeList, RoundTripsEveryFamily) {
  for (const auto& [name, g] : small_graphs()) {
    std::stringstream buffer;
    write_edge_list(buffer, g);
    const Graph back = read_edge_list(buffer);
    EXPECT_EQ(back, g) << name;
    EXPECT_EQ(back.family(), g.family()) << name;
  }
}

TEST(EdgeList, Format) {
  std::stringstream buffer;
  write_edge_list(buffer, build_cycle(4));
  EXPECT_EQ(buffer.str(), "4 2 cycle\n0 1\n0 3\n1 2\n2 3\n");
}

TEST(EdgeList, RejectsBadFiles) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  EXPECT_THROW(parse(""), Error);
  EXPECT_THROW(parse("4 2 cycle\n0 1\n"), Error);                  // too few edges
  EXPECT_THROW(parse("4 2 banana\n0 1\n0 3\n1 2\n2 3\n"), Error);  // unknown tag
  EXPECT_THROW(parse("3 2 cycle\n0 1\n1 2\n0 7\n"), Error);        // out of range
  EXPECT_THROW(parse("4 2 cycle\n0 1\n0 2\n0 3\n1 2\n"), Error);   // irregular
  EXPECT_NO_THROW(parse("3 2 cycle\n0 1\n1 2\n0 2\n"));
}

}  // namespace
}  // namespace lqw
