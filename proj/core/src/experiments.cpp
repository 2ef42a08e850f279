#include "lqw/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

#include "lqw/error.hpp"
#include "lqw/walk.hpp"

namespace lqw {

std::string_view to_string(HorizonSource source) noexcept {
  return source == HorizonSource::kExplicit ? "explicit" : "heuristic";
}

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::kSupported: return "SUPPORTED";
    case Verdict::kNotStrict: return "NOT-STRICT";
    case Verdict::kNotSupported: return "NOT-SUPPORTED";
  }
  return "NOT-SUPPORTED";
}

std::size_t default_horizon(const Graph& g, double loop_weight) {
  const double n = static_cast<double>(g.n_vertices());
  double steps = 4.0 * std::numbers::pi *
                 std::sqrt(n / (2.0 * (std::max(loop_weight, 0.0) + 1.0)));
  if (g.family() == Family::kCycle) steps *= std::sqrt(n);
  return static_cast<std::size_t>(std::ceil(steps));
}

const SweepEntry& SweepRecord::best() const {
  if (entries.empty()) throw Error(ErrorCode::kInvalidInput, "empty sweep");
  const SweepEntry* best = &entries.front();
  for (const SweepEntry& e : entries) {
    if (e.peak_probability > best->peak_probability) best = &e;
  }
  return *best;
}

SweepRecord sweep_loop_weight(const Graph& g, std::span<const double> weights,
                              const SweepOptions& options) {
  if (weights.empty()) {
    throw Error(ErrorCode::kInvalidInput, "sweep needs at least one weight");
  }

  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weights[a] < weights[b];
  });

  SweepRecord record;
  record.family = g.family();
  record.n_vertices = g.n_vertices();
  record.degree = g.degree();
  record.hypothesized_loop_weight =
      static_cast<double>(g.degree()) / static_cast<double>(g.n_vertices());
  record.horizon_source =
      options.horizon ? HorizonSource::kExplicit : HorizonSource::kHeuristic;
  record.entries.resize(weights.size());

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      const double l = weights[order[i]];
      try {
        SearchConfig cfg;
        cfg.loop_weight = l;
        cfg.marked = options.marked;
        cfg.horizon = options.horizon.value_or(default_horizon(g, l));
        const RunRecord run = evolve(g, cfg, options.peak);
        record.entries[i] = {l, cfg.horizon, run.peak_time, run.peak_probability};
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << "run at l = " << l << ": " << e.what();
        std::lock_guard lock(error_mutex);
        if (!first_error) {
          first_error = std::make_exception_ptr(Error(e.code(), msg.str()));
        }
      }
    }
  };

  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency()
                                          : options.threads;
  threads = std::clamp<unsigned>(threads, 1U,
                                 static_cast<unsigned>(weights.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
  return record;
}

HypothesisResult hypothesis_check(const Graph& g,
                                  const HypothesisOptions& options) {
  const auto& mult = options.multipliers;
  if (std::find(mult.begin(), mult.end(), 1.0) == mult.end()) {
    throw Error(ErrorCode::kInvalidParameter, "multipliers must include 1.0");
  }
  if (std::any_of(mult.begin(), mult.end(), [](double c) { return !(c >= 0.0); })) {
    throw Error(ErrorCode::kInvalidParameter, "multipliers must be >= 0");
  }

  const double base =
      static_cast<double>(g.degree()) / static_cast<double>(g.n_vertices());
  std::vector<double> sorted = mult;
  std::stable_sort(sorted.begin(), sorted.end());
  std::vector<double> weights;
  weights.reserve(sorted.size());
  for (const double c : sorted) weights.push_back(c * base);

  HypothesisResult result;
  result.sweep = sweep_loop_weight(g, weights, options.sweep);
  result.multipliers = sorted;

  const auto ref = static_cast<std::size_t>(
      std::find(sorted.begin(), sorted.end(), 1.0) - sorted.begin());
  result.reference_probability = result.sweep.entries[ref].peak_probability;

  const SweepEntry& best = result.sweep.best();
  result.best_probability = best.peak_probability;
  result.best_multiplier =
      sorted[static_cast<std::size_t>(&best - result.sweep.entries.data())];

  if (result.reference_probability >= result.best_probability - options.tolerance) {
    result.verdict = Verdict::kSupported;
  } else if (result.reference_probability >=
             options.scaling_fraction * result.best_probability) {
    result.verdict = Verdict::kNotStrict;
  } else {
    result.verdict = Verdict::kNotSupported;
  }
  return result;
}

}  // namespace lqw
