#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypergrowth/fitting.hpp"
#include "hypergrowth/ratio.hpp"
#include "hypergrowth/time_series.hpp"

namespace hypergrowth {

enum class AbscissaKind { time, ratio_size };
enum class CurveQuantity { value, gradient, growth_rate };

struct CurveSample {
  double x;
  double value;
};

/// Sampled curve with strictly increasing abscissa and finite values.
struct DiagnosticsCurve {
  AbscissaKind abscissa = AbscissaKind::time;
  CurveQuantity quantity = CurveQuantity::value;
  std::vector<CurveSample> samples;
};

DiagnosticsCurve value_curve(const RatioModel& m, std::span<const double> grid);
DiagnosticsCurve gradient_curve(const RatioModel& m,
                                std::span<const double> grid);
DiagnosticsCurve growth_rate_curve(const RatioModel& m,
                                   std::span<const double> grid);

struct SizeCurves {
  DiagnosticsCurve gradient;
  DiagnosticsCurve growth_rate;
  /// Time at which the ratio reaches each (sorted) level.
  std::vector<double> times;
};

/// Gradient and growth rate as functions of the ratio value. Levels are
/// sorted; duplicates are rejected. Each level is mapped to time through
/// time_at_ratio, so unreachable levels raise NoSolutionError.
SizeCurves curves_vs_size(const RatioModel& m, std::vector<double> levels);

/// Growth rate of raw data by centred log differences
/// ln(y[i+1] / y[i-1]) / (t[i+1] - t[i-1]) at interior points.
DiagnosticsCurve observed_growth_rate(const TimeSeries& series);

enum class Monotonicity { increasing, decreasing, non_monotone };

struct MonotonicityReport {
  Monotonicity verdict;
  /// Index i of the first adjacent pair (i-1, i) breaking the trend.
  std::optional<std::size_t> first_violation;
};

/// Strict monotonicity. A step counts as a rise (fall) only if it exceeds
/// 1e-12 times the larger magnitude of its two endpoints. Throws
/// InsufficientDataError for fewer than two samples.
MonotonicityReport monotonicity_check(const DiagnosticsCurve& curve);

enum class BreakDecision { no_break, break_detected };

/// Two-segment (Chow-type) comparison in reciprocal space.
struct BreakTestResult {
  double break_year;
  double sse_single;
  double sse_segmented;
  double f_statistic;
  double p_value;
  BreakDecision decision;
  double alpha;
  std::size_t n_before;  // observations with year <= break_year
  std::size_t n_after;
  Weighting weighting;
};

/// Compares one line through the reciprocals of all observations with two
/// independent lines split at `break_year` (observations at the break year
/// join the earlier segment). F has (2, n - 4) degrees of freedom and a
/// break is reported iff p < alpha. Data fitted without residual gives
/// F = 0 and p = 1.
///
/// The default `size_squared` weighting makes the test calibrated under
/// multiplicative noise on y; unweighted residuals in reciprocal space are
/// heteroscedastic and the test is then badly conservative.
///
/// Throws InsufficientDataError unless at least 3 observations lie strictly
/// before and 3 strictly after the break year.
BreakTestResult break_test(const TimeSeries& series, double break_year,
                           double alpha = 0.05,
                           Weighting weighting = Weighting::size_squared);

struct YearWindow {
  double begin;
  double end;
  bool contains(double year) const noexcept {
    return begin <= year && year <= end;
  }
};

/// The Industrial Revolution, marked on reports.
inline constexpr YearWindow kIndustrialRevolution{1760.0, 1840.0};

/// Conventional regime boundaries tested by default.
inline constexpr double kDefaultCandidateYears[] = {1750.0, 1870.0};

struct ScanEntry {
  double candidate_year;
  bool within_industrial_revolution;
  std::optional<BreakTestResult> result;
  /// Set when the candidate could not be tested.
  std::string error;
};

/// break_test at every candidate; per-candidate failures are recorded in
/// the entry instead of being thrown.
std::vector<ScanEntry> takeoff_scan(
    const TimeSeries& series, std::span<const double> candidate_years,
    double alpha = 0.05, Weighting weighting = Weighting::size_squared);

std::string_view to_string(AbscissaKind kind) noexcept;
std::string_view to_string(CurveQuantity quantity) noexcept;
std::string_view to_string(Monotonicity verdict) noexcept;
std::string_view to_string(BreakDecision decision) noexcept;

}  // namespace hypergrowth
