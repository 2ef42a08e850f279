#include "lqw/reduced.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lqw/error.hpp"
#include "lqw/walk.hpp"

namespace lqw::reduced {
namespace {

void check_size(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidSize,
                "reduced model needs N >= 3; got " + std::to_string(n));
  }
}

void check_positive_loop(double loop_weight) {
  if (!(loop_weight > 0.0) || !std::isfinite(loop_weight)) {
    throw Error(ErrorCode::kDegenerateParameter,
                "reduced operator needs a self-loop weight > 0 (theta "
                "vanishes at l = 0)");
  }
}

}  // namespace

Operator make_operator(std::size_t n, double loop_weight) {
  check_size(n);
  check_positive_loop(loop_weight);
  const double nn = static_cast<double>(n);
  const double l = loop_weight;
  const double denom = nn + l - 1.0;

  Operator u;
  u.cos_theta = (nn - l - 1.0) / denom;
  u.sin_theta = 2.0 * std::sqrt(l * (nn - 1.0)) / denom;
  u.cos_phi = (nn + l - 3.0) / denom;
  u.sin_phi = 2.0 * std::sqrt(nn + l - 2.0) / denom;

  const double ct = u.cos_theta;
  const double st = u.sin_theta;
  const double cp = u.cos_phi;
  const double sp = u.sin_phi;
  u.matrix = {{
      {ct, -st, 0.0, 0.0},
      {0.0, 0.0, -cp, sp},
      {-st, -ct, 0.0, 0.0},
      {0.0, 0.0, sp, cp},
  }};
  return u;
}

State initial_state(std::size_t n, double loop_weight) {
  check_size(n);
  if (!(loop_weight >= 0.0) || !std::isfinite(loop_weight)) {
    throw Error(ErrorCode::kInvalidConfig, "self-loop weight must be >= 0");
  }
  const double nn = static_cast<double>(n);
  const double l = loop_weight;
  const double scale = 1.0 / std::sqrt(nn * (nn + l - 1.0));
  return {
      scale * std::sqrt(l),
      scale * std::sqrt(nn - 1.0),
      scale * std::sqrt(nn - 1.0),
      scale * std::sqrt((nn - 1.0) * (nn + l - 2.0)),
  };
}

State step(const Operator& u, const State& s) {
  State out{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) out[r] += u.matrix[r][c] * s[c];
  }
  return out;
}

double success_probability(const State& s) {
  return std::norm(s[kAA]) + std::norm(s[kAB]);
}

double norm_squared(const State& s) {
  double total = 0.0;
  for (const auto& a : s) total += std::norm(a);
  return total;
}

std::vector<double> evolve(std::size_t n, double loop_weight,
                           std::size_t horizon) {
  if (horizon == 0) throw Error(ErrorCode::kInvalidConfig, "horizon must be >= 1");
  const Operator u = make_operator(n, loop_weight);
  State s = initial_state(n, loop_weight);
  std::vector<double> series;
  series.reserve(horizon + 1);
  series.push_back(success_probability(s));
  for (std::size_t t = 0; t < horizon; ++t) {
    s = step(u, s);
    series.push_back(success_probability(s));
  }
  return series;
}

PerturbationPrediction predict(std::size_t n, double loop_weight) {
  check_size(n);
  check_positive_loop(loop_weight);
  const double ratio = 2.0 * (loop_weight + 1.0) / static_cast<double>(n);
  PerturbationPrediction p;
  p.sigma = std::sqrt(ratio);
  p.t_star = std::numbers::pi / p.sigma;
  p.p_star = 4.0 * loop_weight / ((loop_weight + 1.0) * (loop_weight + 1.0));
  p.in_asymptotic_range = ratio < 1.0;
  return p;
}

State project(const WalkState& s, Vertex marked) {
  const Graph& g = s.graph();
  const std::size_t n = g.n_vertices();
  check_size(n);
  if (g.degree() != n - 1) {
    throw Error(ErrorCode::kInvalidInput,
                "subspace projection is defined for complete graphs only");
  }
  if (marked >= n) {
    throw Error(ErrorCode::kIndexOutOfRange, "marked vertex out of range");
  }
  const std::size_t d = g.degree();
  const double l = s.loop_weight();
  const double root_loop = std::sqrt(l);
  const double nn = static_cast<double>(n);

  State out{};
  const auto a_block = s.block(marked);
  out[kAA] = a_block[d];
  for (std::size_t i = 0; i < d; ++i) out[kAB] += a_block[i];
  out[kAB] /= std::sqrt(nn - 1.0);

  std::complex<double> ba{};
  std::complex<double> bb{};
  for (Vertex b = 0; b < n; ++b) {
    if (b == marked) continue;
    const auto block = s.block(b);
    const auto nbrs = g.neighbors(b);
    bb += root_loop * block[d];
    for (std::size_t i = 0; i < d; ++i) {
      if (nbrs[i] == marked) {
        ba += block[i];
      } else {
        bb += block[i];
      }
    }
  }
  out[kBA] = ba / std::sqrt(nn - 1.0);
  out[kBB] = bb / std::sqrt((nn - 1.0) * (nn + l - 2.0));
  return out;
}

}  // namespace lqw::reduced
