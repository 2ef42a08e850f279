#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "lqw/graph.hpp"

namespace lqw {

class WalkState;

// Search on the complete graph K_N with a weighted self-loop stays inside a
// four-dimensional subspace. With a the marked vertex and b ranging over the
// unmarked ones, the basis is
//
//   |aa> = loop slot at a
//   |ab> = a pointing uniformly at the unmarked vertices
//   |ba> = unmarked vertices pointing at a
//   |bb> = unmarked vertices in their weighted uniform coin state restricted
//          to the unmarked directions (self-loop included)
//
// Component order everywhere is (aa, ab, ba, bb).
namespace reduced {

inline constexpr std::size_t kAA = 0;
inline constexpr std::size_t kAB = 1;
inline constexpr std::size_t kBA = 2;
inline constexpr std::size_t kBB = 3;

using Matrix4 = std::array<std::array<double, 4>, 4>;
using State = std::array<std::complex<double>, 4>;

struct Operator {
  double cos_theta = 1.0;
  double sin_theta = 0.0;
  double cos_phi = 1.0;
  double sin_phi = 0.0;
  Matrix4 matrix{};
};

struct PerturbationPrediction {
  double sigma = 0.0;   // phase of the leading eigenvalue pair e^{+-i sigma}
  double t_star = 0.0;  // pi / sigma
  double p_star = 0.0;  // 4l / (l+1)^2
  // false when 2(l+1)/N >= 1, where the large-N expansion is meaningless.
  bool in_asymptotic_range = true;
};

// cos(theta) = (N-l-1)/(N+l-1), sin(theta) = 2 sqrt(l(N-1))/(N+l-1),
// cos(phi) = (N+l-3)/(N+l-1), sin(phi) = 2 sqrt(N+l-2)/(N+l-1).
// Requires N >= 3 and l > 0.
Operator make_operator(std::size_t n, double loop_weight);

State initial_state(std::size_t n, double loop_weight);

State step(const Operator& u, const State& s);

// |aa|^2 + |ab|^2: both basis states live on the marked vertex.
double success_probability(const State& s);

double norm_squared(const State& s);

// p(0) .. p(horizon) from repeated application of make_operator(n, l).
std::vector<double> evolve(std::size_t n, double loop_weight,
                           std::size_t horizon);

PerturbationPrediction predict(std::size_t n, double loop_weight);

// Inner products of a full complete-graph walk state with the four basis
// vectors above. The graph must be a complete graph.
State project(const WalkState& s, Vertex marked);

}  // namespace reduced
}  // namespace lqw
