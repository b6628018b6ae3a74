#include "hypergrowth/fitting.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "hypergrowth/errors.hpp"
#include "hypergrowth/least_squares.hpp"

namespace hypergrowth {

std::string_view to_string(Weighting w) noexcept {
  switch (w) {
    case Weighting::unweighted: return "unweighted";
    case Weighting::size_squared: return "size_squared";
  }
  return "unknown";
}

Weighting weighting_from_string(std::string_view name) {
  if (name == "unweighted") return Weighting::unweighted;
  if (name == "size_squared") return Weighting::size_squared;
  throw ValidationError("unknown weighting '" + std::string(name) +
                        "' (expected unweighted or size_squared)");
}

HyperbolicFit fit_hyperbolic(const TimeSeries& series, Weighting weighting) {
  const std::size_t n = series.size();
  if (n < 3) {
    throw InsufficientDataError("hyperbolic fit needs at least 3 points, got " +
                                std::to_string(n));
  }
  std::vector<double> t(n), z(n), w;
  if (weighting == Weighting::size_squared) w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Observation& p = series.points()[i];
    t[i] = p.year;
    z[i] = 1.0 / p.value;
    if (!w.empty()) w[i] = p.value * p.value;
  }

  const LineFit line = fit_line(t, z, w);
  const double a = line.intercept;
  const double k = -line.slope;
  if (!(k > 0.0) || !(a > 0.0) || !std::isfinite(a) || !std::isfinite(k)) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "reciprocal regression";
    if (!series.name().empty()) msg << " of '" << series.name() << "'";
    msg << " gave intercept " << a << " and slope " << line.slope
        << "; hyperbolic growth needs a positive intercept and negative slope";
    throw FitRejectedError(msg.str());
  }

  HyperbolicFit fit{.params = HyperbolicParams(a, k),
                    .singularity_time = a / k,
                    .residuals = std::vector<double>(n),
                    .rmse_reciprocal = 0.0,
                    .r_squared_reciprocal = 0.0,
                    .n_points = n,
                    .weighting = weighting};
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    fit.residuals[i] = z[i] - (a - k * t[i]);
    ss += fit.residuals[i] * fit.residuals[i];
  }
  fit.rmse_reciprocal = std::sqrt(ss / static_cast<double>(n));
  fit.r_squared_reciprocal = 1.0 - line.sse / line.sst;
  return fit;
}

RatioFit fit_ratio(const TimeSeries& numerator, const TimeSeries& denominator,
                   Weighting weighting) {
  HyperbolicFit num = fit_hyperbolic(numerator, weighting);
  HyperbolicFit den = fit_hyperbolic(denominator, weighting);
  RatioModel model = make_ratio(num.params, den.params);

  std::vector<Observation> common;
  for (const Observation& p : numerator.points()) {
    if (auto d = denominator.value_at(p.year)) {
      common.push_back({p.year, p.value / *d});
    }
  }
  if (common.size() < 3) {
    throw YearMismatchError(
        "numerator and denominator share " + std::to_string(common.size()) +
        " years; at least 3 are needed for per-capita residuals");
  }

  RatioFit out{.numerator = std::move(num),
               .denominator = std::move(den),
               .model = model,
               .per_capita = {},
               .out_of_domain_years = {}};
  for (const Observation& p : common) {
    if (!model.admits(p.year)) {
      out.out_of_domain_years.push_back(p.year);
      continue;
    }
    const double predicted = eval_ratio(model, p.year);
    out.per_capita.push_back(
        {p.year, p.value, predicted, p.value - predicted});
  }
  return out;
}

TimeSeries predict(const HyperbolicFit& fit, std::span<const double> grid) {
  std::vector<Observation> points;
  points.reserve(grid.size());
  for (double t : grid) points.push_back({t, eval_hyperbolic(fit.params, t)});
  return TimeSeries(std::move(points), "fitted");
}

}  // namespace hypergrowth
