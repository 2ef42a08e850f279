#include "lqw/export.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "lqw/error.hpp"

namespace lqw {
namespace {

// Restores the caller's stream formatting on scope exit.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(std::ostream& out)
      : out_(out), precision_(out.precision()), flags_(out.flags()) {
    out_.flags(std::ios::fmtflags{});
    out_.precision(kCsvPrecision);
  }
  ~PrecisionGuard() {
    out_.precision(precision_);
    out_.flags(flags_);
  }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  std::ostream& out_;
  std::streamsize precision_;
  std::ios::fmtflags flags_;
};

}  // namespace

void write_run_csv(std::ostream& out, const RunRecord& run) {
  PrecisionGuard guard(out);
  out << "step,success_probability\n";
  for (std::size_t t = 0; t < run.probabilities.size(); ++t) {
    out << t << ',' << run.probabilities[t] << '\n';
  }
}

nlohmann::json run_metadata_json(const RunMetadata& meta, const RunRecord& run) {
  nlohmann::json j;
  j["family"] = to_string(meta.family);
  j["n_vertices"] = meta.n_vertices;
  j["degree"] = meta.degree;
  j["loop_weight"] = meta.config.loop_weight;
  j["marked"] = meta.config.marked;
  j["horizon"] = meta.config.horizon;
  j["horizon_source"] = to_string(meta.horizon_source);
  j["peak_time"] = run.peak_time;
  j["peak_probability"] = run.peak_probability;
  j["max_norm_drift"] = run.max_norm_drift;
  j["wall_time_ms"] =
      meta.wall_time_ms ? nlohmann::json(*meta.wall_time_ms) : nlohmann::json();
  return j;
}

void write_sweep_csv(std::ostream& out, const SweepRecord& sweep) {
  PrecisionGuard guard(out);
  out << "loop_weight,peak_time,peak_probability\n";
  for (const SweepEntry& e : sweep.entries) {
    out << e.loop_weight << ',' << e.peak_time << ',' << e.peak_probability
        << '\n';
  }
}

nlohmann::json sweep_json(const SweepRecord& sweep) {
  nlohmann::json j;
  j["family"] = to_string(sweep.family);
  j["n_vertices"] = sweep.n_vertices;
  j["degree"] = sweep.degree;
  j["hypothesized_loop_weight"] = sweep.hypothesized_loop_weight;
  j["horizon_source"] = to_string(sweep.horizon_source);
  auto& rows = j["entries"] = nlohmann::json::array();
  for (const SweepEntry& e : sweep.entries) {
    rows.push_back({{"loop_weight", e.loop_weight},
                    {"horizon", e.horizon},
                    {"peak_time", e.peak_time},
                    {"peak_probability", e.peak_probability}});
  }
  if (!sweep.entries.empty()) j["best_loop_weight"] = sweep.best().loop_weight;
  return j;
}

nlohmann::json hypothesis_json(const HypothesisResult& result) {
  nlohmann::json j = sweep_json(result.sweep);
  for (std::size_t i = 0; i < result.multipliers.size(); ++i) {
    j["entries"][i]["multiplier"] = result.multipliers[i];
  }
  j["verdict"] = to_string(result.verdict);
  j["reference_probability"] = result.reference_probability;
  j["best_probability"] = result.best_probability;
  j["best_multiplier"] = result.best_multiplier;
  return j;
}

void write_comparison_csv(std::ostream& out, std::span<const double> full,
                          std::span<const double> reduced) {
  if (full.size() != reduced.size()) {
    throw Error(ErrorCode::kInvalidInput, "comparison series differ in length");
  }
  PrecisionGuard guard(out);
  out << "step,p_full,p_reduced,abs_diff\n";
  for (std::size_t t = 0; t < full.size(); ++t) {
    out << t << ',' << full[t] << ',' << reduced[t] << ','
        << std::abs(full[t] - reduced[t]) << '\n';
  }
}

}  // namespace lqw
