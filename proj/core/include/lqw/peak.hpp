#pragma once

#include <cstddef>
#include <span>

namespace lqw {

enum class PeakMode { kGlobalMax, kFirstLocalMax };

struct PeakSpec {
  std::size_t window = 5;  // plateau half-width, used by kFirstLocalMax
  PeakMode mode = PeakMode::kFirstLocalMax;
};

struct Peak {
  std::size_t time = 0;
  double probability = 0.0;
};

// kGlobalMax: argmax, earliest index on ties. Needs a non-empty series.
//
// kFirstLocalMax: smallest t with p(t) >= p(t') for every t' within the
// window (clipped at 0, never at the far end, so t + window must exist) and
// p(t) > 2 p(0). Falls back to the global max when no such t exists.
// Needs at least 2*window + 1 samples.
Peak find_peak(std::span<const double> series, const PeakSpec& spec = {});

}  // namespace lqw
