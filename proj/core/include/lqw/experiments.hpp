#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lqw/graph.hpp"
#include "lqw/peak.hpp"

namespace lqw {

enum class HorizonSource { kExplicit, kHeuristic };

std::string_view to_string(HorizonSource source) noexcept;

// ceil(4 pi sqrt(N / (2(l+1)))), four periods of the complete-graph reduced
// model. Cycles evolve on an O(N) time scale, so their horizon is further
// multiplied by sqrt(N).
std::size_t default_horizon(const Graph& g, double loop_weight);

struct SweepOptions {
  std::optional<std::size_t> horizon;  // overrides default_horizon
  PeakSpec peak;
  Vertex marked = 0;
  unsigned threads = 1;  // runs are independent; 0 means hardware concurrency
};

struct SweepEntry {
  double loop_weight = 0.0;
  std::size_t horizon = 0;
  std::size_t peak_time = 0;
  double peak_probability = 0.0;
};

struct SweepRecord {
  Family family = Family::kCustom;
  std::size_t n_vertices = 0;
  std::size_t degree = 0;
  double hypothesized_loop_weight = 0.0;  // d / N
  HorizonSource horizon_source = HorizonSource::kHeuristic;
  std::vector<SweepEntry> entries;         // sorted by loop weight

  // Entry with the highest peak; earliest entry wins ties.
  const SweepEntry& best() const;
};

// One evolve + find_peak per weight. Entries come back sorted by weight
// (stable for equal weights) no matter how many threads run them.
SweepRecord sweep_loop_weight(const Graph& g, std::span<const double> weights,
                              const SweepOptions& options = {});

enum class Verdict { kSupported, kNotStrict, kNotSupported };

std::string_view to_string(Verdict verdict) noexcept;

struct HypothesisOptions {
  std::vector<double> multipliers{0.25, 0.5, 1.0, 2.0, 4.0};
  double tolerance = 0.02;
  // NOT-STRICT applies when l = d/N loses by more than `tolerance` but
  // still reaches this fraction of the best peak in the grid.
  double scaling_fraction = 0.5;
  SweepOptions sweep;
};

struct HypothesisResult {
  Verdict verdict = Verdict::kNotSupported;
  SweepRecord sweep;
  std::vector<double> multipliers;  // aligned with sweep.entries
  double reference_probability = 0.0;  // p* at multiplier 1
  double best_probability = 0.0;
  double best_multiplier = 1.0;
};

// Sweeps l = c * d/N over the multipliers. SUPPORTED iff
// p*(1) >= p*(c) - tolerance for every c.
HypothesisResult hypothesis_check(const Graph& g,
                                  const HypothesisOptions& options = {});

}  // namespace lqw
