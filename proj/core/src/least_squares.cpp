#include "hypergrowth/least_squares.hpp"

#include <cmath>

#include "hypergrowth/errors.hpp"

namespace hypergrowth {

LineFit fit_line(std::span<const double> t, std::span<const double> z,
                 std::span<const double> weights) {
  const std::size_t n = t.size();
  if (z.size() != n || (!weights.empty() && weights.size() != n)) {
    throw ValidationError("fit_line: input spans differ in length");
  }
  if (n < 2) {
    throw InsufficientDataError("fit_line needs at least two points");
  }
  auto w = [&](std::size_t i) { return weights.empty() ? 1.0 : weights[i]; };

  double sw = 0.0, st = 0.0, sz = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(w(i) > 0.0) || !std::isfinite(w(i))) {
      throw ValidationError("fit_line: weights must be finite and positive");
    }
    sw += w(i);
    st += w(i) * t[i];
    sz += w(i) * z[i];
  }
  const double t_mean = st / sw;
  const double z_mean = sz / sw;

  double stt = 0.0, stz = 0.0, szz = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dt = t[i] - t_mean;
    const double dz = z[i] - z_mean;
    stt += w(i) * dt * dt;
    stz += w(i) * dt * dz;
    szz += w(i) * dz * dz;
  }
  if (!(stt > 0.0)) {
    throw ValidationError("fit_line: abscissae are all equal");
  }

  LineFit fit{};
  fit.slope = stz / stt;
  fit.intercept = z_mean - fit.slope * t_mean;
  fit.sst = szz;
  fit.weight_sum = sw;
  // Residuals are summed directly; szz - slope * stz cancels badly when the
  // fit is nearly exact.
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = z[i] - (z_mean + fit.slope * (t[i] - t_mean));
    sse += w(i) * r * r;
  }
  fit.sse = sse;
  return fit;
}

}  // namespace hypergrowth
