#include "lqw/walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lqw/error.hpp"

namespace lqw {
namespace {

// |a|^2 without the hypot call std::norm makes under strict IEEE semantics.
inline double abs2(const Amplitude& a) noexcept {
  return a.real() * a.real() + a.imag() * a.imag();
}

void check_loop_weight(double loop_weight) {
  if (!(loop_weight >= 0.0) || !std::isfinite(loop_weight)) {
    throw Error(ErrorCode::kInvalidConfig,
                "self-loop weight must be finite and >= 0");
  }
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.n_vertices()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "vertex " + std::to_string(v) + " out of range for N = " +
                    std::to_string(g.n_vertices()));
  }
}

}  // namespace

WalkState::WalkState(Graph graph, double loop_weight,
                     std::vector<Amplitude> amplitudes)
    : graph_(std::move(graph)),
      loop_weight_(loop_weight),
      amplitudes_(std::move(amplitudes)) {
  check_loop_weight(loop_weight_);
  if (amplitudes_.size() != graph_.amplitude_count()) {
    throw Error(ErrorCode::kInvalidInput,
                "amplitude vector has length " +
                    std::to_string(amplitudes_.size()) + ", expected " +
                    std::to_string(graph_.amplitude_count()));
  }
}

double WalkState::norm_squared() const noexcept {
  double total = 0.0;
  for (const Amplitude& a : amplitudes_) total += abs2(a);
  return total;
}

WalkState initial_state(const Graph& g, double loop_weight) {
  check_loop_weight(loop_weight);
  const double n = static_cast<double>(g.n_vertices());
  const double d = static_cast<double>(g.degree());
  const double edge = 1.0 / std::sqrt(n * (d + loop_weight));
  const double loop = std::sqrt(loop_weight) * edge;

  std::vector<Amplitude> amps(g.amplitude_count(), Amplitude{edge, 0.0});
  const std::size_t block = g.degree() + 1;
  for (std::size_t v = 0; v < g.n_vertices(); ++v) {
    amps[v * block + g.degree()] = Amplitude{loop, 0.0};
  }
  return WalkState(g, loop_weight, std::move(amps));
}

void apply_oracle(WalkState& s, Vertex marked) {
  check_vertex(s.graph(), marked);
  for (Amplitude& a : s.block(marked)) a = -a;
}

void apply_coin(WalkState& s) {
  const std::size_t d = s.graph().degree();
  const std::size_t block = d + 1;
  const double root_loop = std::sqrt(s.loop_weight());
  const double inv_weight = 1.0 / (static_cast<double>(d) + s.loop_weight());

  auto amps = s.amplitudes();
  for (std::size_t base = 0; base < amps.size(); base += block) {
    Amplitude* a = amps.data() + base;
    Amplitude sum = root_loop * a[d];
    for (std::size_t i = 0; i < d; ++i) sum += a[i];
    const Amplitude twice_mean = 2.0 * sum * inv_weight;
    for (std::size_t i = 0; i < d; ++i) a[i] = twice_mean - a[i];
    a[d] = root_loop * twice_mean - a[d];
  }
}

void apply_shift(WalkState& s) {
  const Graph& g = s.graph();
  const std::size_t n = g.n_vertices();
  const std::size_t d = g.degree();
  const std::size_t block = d + 1;
  auto amps = s.amplitudes();

  auto swap_range = [&](Vertex u, Vertex lo, Vertex hi) {
    const auto nbrs = g.neighbors(u);
    const auto back = g.inverse_slots(u);
    auto i = static_cast<std::size_t>(
        std::lower_bound(nbrs.begin(), nbrs.end(), lo) - nbrs.begin());
    for (; i < d && nbrs[i] < hi; ++i) {
      std::swap(amps[std::size_t{u} * block + i],
                amps[std::size_t{nbrs[i]} * block + back[i]]);
    }
  };

  // Each undirected edge is swapped once, from its lower endpoint. Dense
  // graphs walk the (u, v) plane in square tiles so both sides of the swap
  // stay in cache; the result is identical since the swaps are disjoint.
  constexpr std::size_t kTile = 32;
  if (d < kTile) {
    for (Vertex u = 0; u < n; ++u) {
      swap_range(u, u + 1, static_cast<Vertex>(n));
    }
    return;
  }
  for (std::size_t u0 = 0; u0 < n; u0 += kTile) {
    const std::size_t u1 = std::min(n, u0 + kTile);
    for (std::size_t v0 = u0; v0 < n; v0 += kTile) {
      const std::size_t v1 = std::min(n, v0 + kTile);
      for (std::size_t u = u0; u < u1; ++u) {
        swap_range(static_cast<Vertex>(u),
                   static_cast<Vertex>(std::max(v0, u + 1)),
                   static_cast<Vertex>(v1));
      }
    }
  }
}

void step(WalkState& s, Vertex marked) {
  apply_oracle(s, marked);
  apply_coin(s);
  apply_shift(s);
}

double success_probability(const WalkState& s, Vertex marked) {
  check_vertex(s.graph(), marked);
  double p = 0.0;
  for (const Amplitude& a : s.block(marked)) p += abs2(a);
  // Rounding can push a fully concentrated state a few ulps above 1.
  return std::min(p, 1.0);
}

RunRecord evolve(const Graph& g, const SearchConfig& cfg, const PeakSpec& peak) {
  if (cfg.horizon == 0) {
    throw Error(ErrorCode::kInvalidConfig, "horizon must be >= 1");
  }
  check_vertex(g, cfg.marked);
  WalkState s = initial_state(g, cfg.loop_weight);

  RunRecord record;
  record.probabilities.reserve(cfg.horizon + 1);
  record.probabilities.push_back(success_probability(s, cfg.marked));
  record.max_norm_drift = std::abs(s.norm_squared() - 1.0);
  for (std::size_t t = 0; t < cfg.horizon; ++t) {
    step(s, cfg.marked);
    record.probabilities.push_back(success_probability(s, cfg.marked));
    record.max_norm_drift =
        std::max(record.max_norm_drift, std::abs(s.norm_squared() - 1.0));
  }

  PeakSpec spec = peak;
  if (spec.mode == PeakMode::kFirstLocalMax &&
      record.probabilities.size() < 2 * spec.window + 1) {
    spec.mode = PeakMode::kGlobalMax;
  }
  const Peak found = find_peak(record.probabilities, spec);
  record.peak_time = found.time;
  record.peak_probability = found.probability;
  return record;
}

}  // namespace lqw
