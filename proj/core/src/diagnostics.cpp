#include "hypergrowth/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hypergrowth/errors.hpp"
#include "hypergrowth/least_squares.hpp"
#include "hypergrowth/special_functions.hpp"

namespace hypergrowth {

namespace {

constexpr double kMonotoneSlack = 1e-12;

// Residual RMS below this fraction of the spread of the reciprocals is
// treated as an exact fit.
constexpr double kExactFitTolerance = 1e-9;

template <typename Fn>
DiagnosticsCurve sample_curve(std::span<const double> grid,
                              CurveQuantity quantity, Fn&& fn) {
  DiagnosticsCurve curve{AbscissaKind::time, quantity, {}};
  curve.samples.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i > 0 && !(grid[i - 1] < grid[i])) {
      throw ValidationError("curve grid must be strictly increasing");
    }
    curve.samples.push_back({grid[i], fn(grid[i])});
  }
  return curve;
}

struct Segment {
  std::vector<double> t, z, w;

  void add(const Observation& p, Weighting weighting) {
    t.push_back(p.year);
    z.push_back(1.0 / p.value);
    if (weighting == Weighting::size_squared) w.push_back(p.value * p.value);
  }
  LineFit fit() const { return fit_line(t, z, w); }

  // Weighted squared residual attainable from rounding alone.
  double roundoff_floor(const LineFit& f) const {
    constexpr double ulp = 64.0 * std::numeric_limits<double>::epsilon();
    double sum = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double scale =
          ulp * (std::abs(f.intercept) + std::abs(f.slope * t[i]));
      sum += (w.empty() ? 1.0 : w[i]) * scale * scale;
    }
    return sum;
  }
};

}  // namespace

DiagnosticsCurve value_curve(const RatioModel& m,
                             std::span<const double> grid) {
  return sample_curve(grid, CurveQuantity::value,
                      [&](double t) { return eval_ratio(m, t); });
}

DiagnosticsCurve gradient_curve(const RatioModel& m,
                                std::span<const double> grid) {
  return sample_curve(grid, CurveQuantity::gradient,
                      [&](double t) { return ratio_gradient(m, t); });
}

DiagnosticsCurve growth_rate_curve(const RatioModel& m,
                                   std::span<const double> grid) {
  return sample_curve(grid, CurveQuantity::growth_rate,
                      [&](double t) { return ratio_growth_rate(m, t); });
}

SizeCurves curves_vs_size(const RatioModel& m, std::vector<double> levels) {
  std::sort(levels.begin(), levels.end());
  if (std::adjacent_find(levels.begin(), levels.end()) != levels.end()) {
    throw ValidationError("ratio levels must be distinct");
  }
  SizeCurves out{{AbscissaKind::ratio_size, CurveQuantity::gradient, {}},
                 {AbscissaKind::ratio_size, CurveQuantity::growth_rate, {}},
                 {}};
  for (double level : levels) {
    const double t = time_at_ratio(m, level);
    out.times.push_back(t);
    out.gradient.samples.push_back({level, ratio_gradient(m, t)});
    out.growth_rate.samples.push_back({level, ratio_growth_rate(m, t)});
  }
  return out;
}

DiagnosticsCurve observed_growth_rate(const TimeSeries& series) {
  DiagnosticsCurve curve{AbscissaKind::time, CurveQuantity::growth_rate, {}};
  const auto& p = series.points();
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const double rate = std::log(p[i + 1].value / p[i - 1].value) /
                        (p[i + 1].year - p[i - 1].year);
    curve.samples.push_back({p[i].year, rate});
  }
  return curve;
}

MonotonicityReport monotonicity_check(const DiagnosticsCurve& curve) {
  const auto& s = curve.samples;
  if (s.size() < 2) {
    throw InsufficientDataError("monotonicity check needs at least 2 samples");
  }
  auto step_sign = [&](std::size_t i) {
    const double lo = s[i - 1].value;
    const double hi = s[i].value;
    const double slack =
        kMonotoneSlack * std::max(std::abs(lo), std::abs(hi));
    if (hi - lo > slack) return 1;
    if (lo - hi > slack) return -1;
    return 0;
  };

  const int direction = step_sign(1);
  if (direction == 0) return {Monotonicity::non_monotone, 1};
  for (std::size_t i = 2; i < s.size(); ++i) {
    if (step_sign(i) != direction) return {Monotonicity::non_monotone, i};
  }
  return {direction > 0 ? Monotonicity::increasing : Monotonicity::decreasing,
          std::nullopt};
}

BreakTestResult break_test(const TimeSeries& series, double break_year,
                           double alpha, Weighting weighting) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("alpha must lie in (0, 1)");
  }
  Segment all, before, after;
  std::size_t strictly_before = 0;
  for (const Observation& p : series.points()) {
    all.add(p, weighting);
    if (p.year <= break_year) {
      before.add(p, weighting);
      if (p.year < break_year) ++strictly_before;
    } else {
      after.add(p, weighting);
    }
  }
  if (strictly_before < 3 || after.t.size() < 3) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "break test at " << break_year
        << " needs at least 3 observations on each side, got "
        << strictly_before << " before and " << after.t.size() << " after";
    throw InsufficientDataError(msg.str());
  }

  const LineFit single = all.fit();
  const double sse_seg_raw = before.fit().sse + after.fit().sse;
  const double sse_single = single.sse;
  const double sse_segmented = std::min(sse_seg_raw, sse_single);
  const double n = static_cast<double>(all.t.size());
  const double exact =
      std::max(kExactFitTolerance * kExactFitTolerance * single.sst,
               all.roundoff_floor(single));

  BreakTestResult r{.break_year = break_year,
                    .sse_single = sse_single,
                    .sse_segmented = sse_segmented,
                    .f_statistic = 0.0,
                    .p_value = 1.0,
                    .decision = BreakDecision::no_break,
                    .alpha = alpha,
                    .n_before = before.t.size(),
                    .n_after = after.t.size(),
                    .weighting = weighting};
  if (sse_single <= exact) {
    // Exact single-line fit: no evidence of a break.
  } else if (sse_segmented <= exact) {
    r.f_statistic = std::numeric_limits<double>::infinity();
    r.p_value = 0.0;
  } else {
    r.f_statistic = ((sse_single - sse_segmented) / 2.0) /
                    (sse_segmented / (n - 4.0));
    r.p_value = fisher_f_survival(r.f_statistic, 2.0, n - 4.0);
  }
  r.decision = r.p_value < alpha ? BreakDecision::break_detected
                                 : BreakDecision::no_break;
  return r;
}

std::vector<ScanEntry> takeoff_scan(const TimeSeries& series,
                                    std::span<const double> candidate_years,
                                    double alpha, Weighting weighting) {
  std::vector<ScanEntry> out;
  out.reserve(candidate_years.size());
  for (double year : candidate_years) {
    ScanEntry entry{year, kIndustrialRevolution.contains(year), std::nullopt,
                    {}};
    try {
      entry.result = break_test(series, year, alpha, weighting);
    } catch (const Error& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::string_view to_string(AbscissaKind kind) noexcept {
  return kind == AbscissaKind::time ? "time" : "ratio_size";
}

std::string_view to_string(CurveQuantity quantity) noexcept {
  switch (quantity) {
    case CurveQuantity::value: return "value";
    case CurveQuantity::gradient: return "gradient";
    case CurveQuantity::growth_rate: return "growth_rate";
  }
  return "unknown";
}

std::string_view to_string(Monotonicity verdict) noexcept {
  switch (verdict) {
    case Monotonicity::increasing: return "monotone_increasing";
    case Monotonicity::decreasing: return "monotone_decreasing";
    case Monotonicity::non_monotone: return "non_monotone";
  }
  return "unknown";
}

std::string_view to_string(BreakDecision decision) noexcept {
  return decision == BreakDecision::no_break ? "no_break" : "break_detected";
}

}  // namespace hypergrowth
