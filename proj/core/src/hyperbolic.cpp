#include "hypergrowth/hyperbolic.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hypergrowth/errors.hpp"

namespace hypergrowth {

namespace {

void require_admitted(const HyperbolicParams& p, double t) {
  if (!std::isfinite(t) || !p.admits(t)) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "t = " << t << " is at or past the singularity guard (t_s = "
        << p.singularity_time() << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace

HyperbolicParams::HyperbolicParams(double intercept, double slope)
    : intercept_(intercept), slope_(slope) {
  if (!(std::isfinite(intercept) && intercept > 0.0)) {
    throw ValidationError("hyperbolic intercept must be finite and positive");
  }
  if (!(std::isfinite(slope) && slope > 0.0)) {
    throw ValidationError("hyperbolic slope must be finite and positive");
  }
}

double HyperbolicParams::guard_time() const noexcept {
  double t = intercept_ * (1.0 - kSingularityGuard) / slope_;
  while (!admits(t)) {
    t = std::nextafter(t, -std::numeric_limits<double>::infinity());
  }
  return t;
}

double eval_hyperbolic(const HyperbolicParams& p, double t) {
  require_admitted(p, t);
  return 1.0 / reciprocal_value(p, t);
}

double reciprocal_value(const HyperbolicParams& p, double t) noexcept {
  return p.intercept() - p.slope() * t;
}

double singularity_time(const HyperbolicParams& p) noexcept {
  return p.singularity_time();
}

double inverse_time(const HyperbolicParams& p, double size) {
  if (!(size > 0.0) || std::isnan(size)) {
    throw DomainError("inverse_time requires a positive size");
  }
  return p.intercept() / p.slope() - 1.0 / (p.slope() * size);
}

double derivative(const HyperbolicParams& p, double t) {
  require_admitted(p, t);
  const double d = reciprocal_value(p, t);
  return p.slope() / (d * d);
}

double growth_rate(const HyperbolicParams& p, double t) {
  require_admitted(p, t);
  return p.slope() / reciprocal_value(p, t);
}

}  // namespace hypergrowth
