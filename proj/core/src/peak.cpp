#include "lqw/peak.hpp"

#include <algorithm>
#include <string>

#include "lqw/error.hpp"

namespace lqw {
namespace {

Peak global_max(std::span<const double> series) {
  const auto it = std::max_element(series.begin(), series.end());
  return {static_cast<std::size_t>(it - series.begin()), *it};
}

}  // namespace

Peak find_peak(std::span<const double> series, const PeakSpec& spec) {
  if (series.empty()) {
    throw Error(ErrorCode::kInvalidInput, "empty probability series");
  }
  if (spec.mode == PeakMode::kGlobalMax) return global_max(series);

  if (spec.window < 1) {
    throw Error(ErrorCode::kInvalidInput, "peak window must be >= 1");
  }
  const std::size_t w = spec.window;
  if (series.size() < 2 * w + 1) {
    throw Error(ErrorCode::kInvalidInput,
                "series of length " + std::to_string(series.size()) +
                    " too short for peak window " + std::to_string(w));
  }
  const double floor = 2.0 * series.front();
  for (std::size_t t = 0; t + w < series.size(); ++t) {
    const double p = series[t];
    if (!(p > floor)) continue;
    const std::size_t lo = t >= w ? t - w : 0;
    const auto first = series.begin() + static_cast<std::ptrdiff_t>(lo);
    const auto last = series.begin() + static_cast<std::ptrdiff_t>(t + w + 1);
    if (std::all_of(first, last, [p](double q) { return p >= q; })) {
      return {t, p};
    }
  }
  return global_max(series);
}

}  // namespace lqw
