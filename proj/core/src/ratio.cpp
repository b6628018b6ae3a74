#include "hypergrowth/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypergrowth/errors.hpp"

namespace hypergrowth {

namespace {

// |C| at or below this fraction of k_f a_g counts as zero.
constexpr double kConstantTolerance = 1e-12;

void require_admitted(const RatioModel& m, double t) {
  if (!std::isfinite(t) || !m.admits(t)) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "t = " << t << " is outside the ratio domain (ends at "
        << m.domain_end() << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace

double RatioModel::modulation_constant() const noexcept {
  return numerator_.slope() * denominator_.intercept() -
         denominator_.slope() * numerator_.intercept();
}

RatioShape RatioModel::shape() const noexcept {
  const double c = modulation_constant();
  const double scale = numerator_.slope() * denominator_.intercept();
  if (std::abs(c) <= kConstantTolerance * scale) return RatioShape::constant;
  return c > 0.0 ? RatioShape::escalating : RatioShape::diminishing;
}

double RatioModel::guard_time() const noexcept {
  return std::min(numerator_.guard_time(), denominator_.guard_time());
}

double RatioModel::domain_end() const noexcept {
  return std::min(numerator_.singularity_time(),
                  denominator_.singularity_time());
}

RatioModel make_ratio(const HyperbolicParams& numerator,
                      const HyperbolicParams& denominator) noexcept {
  return RatioModel(numerator, denominator);
}

double eval_ratio(const RatioModel& m, double t, RatioPathway pathway) {
  require_admitted(m, t);
  const HyperbolicParams& f = m.numerator();
  const HyperbolicParams& g = m.denominator();
  switch (pathway) {
    case RatioPathway::direct:
      return eval_hyperbolic(f, t) / eval_hyperbolic(g, t);
    case RatioPathway::hyperbolic_times_linear:
      return eval_hyperbolic(f, t) * reciprocal_value(g, t);
    case RatioPathway::linear_over_linear:
      return reciprocal_value(g, t) / reciprocal_value(f, t);
  }
  return reciprocal_value(g, t) / reciprocal_value(f, t);
}

double ratio_gradient(const RatioModel& m, double t) {
  require_admitted(m, t);
  const double d = reciprocal_value(m.numerator(), t);
  return m.modulation_constant() / (d * d);
}

double ratio_growth_rate(const RatioModel& m, double t) {
  require_admitted(m, t);
  return growth_rate(m.numerator(), t) - growth_rate(m.denominator(), t);
}

double time_at_ratio(const RatioModel& m, double level) {
  if (!(level > 0.0) || !std::isfinite(level)) {
    throw NoSolutionError("ratio level must be finite and positive");
  }
  const HyperbolicParams& f = m.numerator();
  const HyperbolicParams& g = m.denominator();
  // (a_g - k_g t) = level (a_f - k_f t)
  const double denom = level * f.slope() - g.slope();
  const double scale = std::max(level * f.slope(), g.slope());
  std::ostringstream msg;
  msg.precision(10);
  if (std::abs(denom) <= 1e-15 * scale) {
    msg << "ratio level " << level << " is the asymptotic level "
        << g.slope() / f.slope() << " and is never reached";
    throw NoSolutionError(msg.str());
  }
  const double t = (level * f.intercept() - g.intercept()) / denom;
  if (!std::isfinite(t) || !m.admits(t)) {
    msg << "ratio level " << level << " is only reached at t = " << t
        << ", outside the domain ending at " << m.domain_end();
    throw NoSolutionError(msg.str());
  }
  return t;
}

RatioShape classify_shape(const RatioModel& m) noexcept { return m.shape(); }

std::string_view to_string(RatioShape shape) noexcept {
  switch (shape) {
    case RatioShape::escalating: return "escalating";
    case RatioShape::diminishing: return "diminishing";
    case RatioShape::constant: return "constant";
  }
  return "unknown";
}

std::string_view to_string(RatioPathway pathway) noexcept {
  switch (pathway) {
    case RatioPathway::direct: return "direct";
    case RatioPathway::hyperbolic_times_linear: return "hyperbolic_times_linear";
    case RatioPathway::linear_over_linear: return "linear_over_linear";
  }
  return "unknown";
}

}  // namespace hypergrowth
