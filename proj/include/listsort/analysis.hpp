// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "listsort/core.hpp"

namespace listsort {

/// Closed-form operation-count predictions for List Sort.
struct Prediction {
  double best = 0;             // n
  double average = 0;          // n T / (L - 1)
  double worst_insertion = 0;  // n L
  double worst_merging = 0;    // n^2 / (8 L)
};

/// Rounds to three significant figures.
inline double round_sig3(double x) {
  if (x == 0 || !std::isfinite(x)) return x;
  const double scale = std::pow(10.0, 2 - std::floor(std::log10(std::fabs(x))));
  return std::round(x * scale) / scale;
}

/// n elements, T runs created, capacity L. Throws std::invalid_argument for L < 2.
inline Prediction predict(std::size_t n, std::uint64_t runs, std::size_t capacity) {
  if (capacity < 2) throw std::invalid_argument("prediction needs capacity L >= 2");
  const double nn = static_cast<double>(n);
  const double t = static_cast<double>(runs);
  const double l = static_cast<double>(capacity);
  return Prediction{nn, nn * t / (l - 1), nn * l, nn * nn / (8 * l)};
}

inline Prediction predict_sig3(std::size_t n, std::uint64_t runs, std::size_t capacity) {
  const Prediction p = predict(n, runs, capacity);
  return Prediction{round_sig3(p.best), round_sig3(p.average), round_sig3(p.worst_insertion),
                    round_sig3(p.worst_merging)};
}

enum class Regime { best, average, worst };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::best: return "best";
    case Regime::average: return "average";
    case Regime::worst: return "worst";
  }
  return "?";
}

/// asc/desc are best case, worst is the interleave pattern, everything else average.
inline Regime regime_for(const std::string& pattern) {
  if (pattern == "asc" || pattern == "desc") return Regime::best;
  if (pattern == "worst") return Regime::worst;
  return Regime::average;
}

struct RatioRecord {
  Regime regime = Regime::average;
  double predicted = 0;
  double measured = 0;
  double ratio = 0;  // measured / predicted
};

/// Measured comparisons against the prediction for the report's regime.
/// Worst case is judged against insertion plus merging terms.
inline RatioRecord compare_prediction(const SortReport& report, const Prediction& pred) {
  RatioRecord rec;
  rec.regime = regime_for(report.pattern);
  switch (rec.regime) {
    case Regime::best: rec.predicted = pred.best; break;
    case Regime::average: rec.predicted = pred.average; break;
    case Regime::worst: rec.predicted = pred.worst_insertion + pred.worst_merging; break;
  }
  rec.measured = static_cast<double>(report.metrics.comparisons);
  rec.ratio = rec.predicted > 0 ? rec.measured / rec.predicted : 0.0;
  return rec;
}

}  // namespace listsort
