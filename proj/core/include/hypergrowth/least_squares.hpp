#pragma once

#include <span>

namespace hypergrowth {

/// Straight line z = intercept + slope * t.
struct LineFit {
  double intercept;
  double slope;
  double sse;        // weighted sum of squared residuals
  double sst;        // weighted total sum of squares about the weighted mean
  double weight_sum;
};

/// Weighted least-squares line through (t_i, z_i). An empty `weights` span
/// means unit weights. Uses centred sums. Throws InsufficientDataError for
/// fewer than two points and ValidationError for mismatched spans, constant
/// abscissae, or non-positive weights.
LineFit fit_line(std::span<const double> t, std::span<const double> z,
                 std::span<const double> weights = {});

}  // namespace hypergrowth
