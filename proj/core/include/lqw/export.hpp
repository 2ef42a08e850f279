#pragma once

#include <iosfwd>
#include <optional>
#include <span>

#include <nlohmann/json.hpp>

#include "lqw/experiments.hpp"
#include "lqw/walk.hpp"

namespace lqw {

// Digits used for every probability written as text.
inline constexpr int kCsvPrecision = 15;

struct RunMetadata {
  Family family = Family::kCustom;
  std::size_t n_vertices = 0;
  std::size_t degree = 0;
  SearchConfig config;
  HorizonSource horizon_source = HorizonSource::kExplicit;
  std::optional<double> wall_time_ms;  // null keeps output byte-stable
};

// "step,success_probability", one row per step.
void write_run_csv(std::ostream& out, const RunRecord& run);

nlohmann::json run_metadata_json(const RunMetadata& meta, const RunRecord& run);

// "loop_weight,peak_time,peak_probability"
void write_sweep_csv(std::ostream& out, const SweepRecord& sweep);

nlohmann::json sweep_json(const SweepRecord& sweep);
nlohmann::json hypothesis_json(const HypothesisResult& result);

// "step,p_full,p_reduced,abs_diff"
void write_comparison_csv(std::ostream& out, std::span<const double> full,
                          std::span<const double> reduced);

}  // namespace lqw
