#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "lqw/graph.hpp"
#include "lqw/peak.hpp"

namespace lqw {

using Amplitude = std::complex<double>;

struct SearchConfig {
  double loop_weight = 0.0;  // self-loop weight l >= 0
  Vertex marked = 0;
  std::size_t horizon = 1;   // number of steps to apply
};

// State of the lackadaisical walk. Each vertex owns a block of d+1
// amplitudes: slots 0..d-1 point at the sorted neighbours, slot d is the
// weighted self-loop.
class WalkState {
 public:
  WalkState(Graph graph, double loop_weight, std::vector<Amplitude> amplitudes);

  const Graph& graph() const noexcept { return graph_; }
  double loop_weight() const noexcept { return loop_weight_; }
  std::size_t block_size() const noexcept { return graph_.degree() + 1; }

  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }

  std::span<const Amplitude> block(Vertex v) const noexcept {
    return {amplitudes_.data() + std::size_t{v} * block_size(), block_size()};
  }
  std::span<Amplitude> block(Vertex v) noexcept {
    return {amplitudes_.data() + std::size_t{v} * block_size(), block_size()};
  }

  double norm_squared() const noexcept;

 private:
  Graph graph_;
  double loop_weight_;
  std::vector<Amplitude> amplitudes_;
};

// Uniform over vertices; per vertex the coin state is proportional to
// (1, ..., 1, sqrt(l)).
WalkState initial_state(const Graph& g, double loop_weight);

// Q: negate every amplitude at the marked vertex.
void apply_oracle(WalkState& s, Vertex marked);

// I (x) C with C = 2|s_c><s_c| - I, evaluated per vertex as an inversion
// about the weighted mean.
void apply_coin(WalkState& s);

// Flip-flop shift |u->v> <-> |v->u>; loop slots are fixed points.
void apply_shift(WalkState& s);

// U = S (I (x) C) (Q (x) I).
void step(WalkState& s, Vertex marked);

double success_probability(const WalkState& s, Vertex marked);

struct RunRecord {
  std::vector<double> probabilities;  // p(0) .. p(horizon)
  std::size_t peak_time = 0;
  double peak_probability = 0.0;
  double max_norm_drift = 0.0;  // max_t |<psi(t)|psi(t)> - 1|
};

// Drives `step` for cfg.horizon steps from initial_state and records the
// success probability after every step. The peak uses `find_peak`; global
// max is used whenever the series is too short for a first-local-max window.
RunRecord evolve(const Graph& g, const SearchConfig& cfg,
                 const PeakSpec& peak = {});

}  // namespace lqw
