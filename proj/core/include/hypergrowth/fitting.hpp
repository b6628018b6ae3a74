#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "hypergrowth/hyperbolic.hpp"
#include "hypergrowth/ratio.hpp"
#include "hypergrowth/time_series.hpp"

namespace hypergrowth {

/// Weighting of squared reciprocal-space residuals.
///
/// `size_squared` weighs each squared residual (1/y_i - line_i)^2 by y_i^2,
/// which turns it into a relative residual on y. It stops the large
/// reciprocals of early, small values from dominating the fit.
enum class Weighting { unweighted, size_squared };

std::string_view to_string(Weighting w) noexcept;
/// Throws ValidationError for unknown names.
Weighting weighting_from_string(std::string_view name);

struct HyperbolicFit {
  HyperbolicParams params;
  double singularity_time;
  /// 1/y_i - (a - k t_i), in input order.
  std::vector<double> residuals;
  double rmse_reciprocal;
  double r_squared_reciprocal;
  std::size_t n_points;
  Weighting weighting;
};

/// Least-squares line through the reciprocals of the observations.
/// Throws InsufficientDataError for fewer than 3 points and
/// FitRejectedError when the line is not decreasing with positive intercept.
HyperbolicFit fit_hyperbolic(const TimeSeries& series,
                             Weighting weighting = Weighting::unweighted);

struct PerCapitaResidual {
  double year;
  double observed;
  double predicted;
  double residual;  // observed - predicted
};

struct RatioFit {
  HyperbolicFit numerator;
  HyperbolicFit denominator;
  RatioModel model;
  /// Common years inside the model domain.
  std::vector<PerCapitaResidual> per_capita;
  /// Common years at or past the model guard; no prediction exists there.
  std::vector<double> out_of_domain_years;
};

/// Fits both series and forms numerator / denominator. Throws
/// YearMismatchError when the series share fewer than 3 years.
RatioFit fit_ratio(const TimeSeries& numerator, const TimeSeries& denominator,
                   Weighting weighting = Weighting::unweighted);

/// Fitted trajectory on a strictly increasing grid.
TimeSeries predict(const HyperbolicFit& fit, std::span<const double> grid);

}  // namespace hypergrowth
