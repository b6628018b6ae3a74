#pragma once

#include <string_view>

#include "hypergrowth/hyperbolic.hpp"

namespace hypergrowth {

/// Algebraically equivalent routes to the ratio of two trajectories.
enum class RatioPathway {
  direct,                   // f(t) / g(t)
  hyperbolic_times_linear,  // f(t) * [1/g](t)
  linear_over_linear,       // [1/g](t) / [1/f](t)
};

enum class RatioShape {
  escalating,   // numerator diverges first; the ratio blows up
  diminishing,  // denominator diverges first; the ratio falls to zero
  constant,     // identical trajectories up to tolerance
};

/// Ratio of two hyperbolic trajectories, R(t) = f(t) / g(t), i.e. the
/// numerator trajectory modulated by the reciprocal line of the denominator.
///
/// The modulation constant C = k_f a_g - k_g a_f fixes the sign of dR/dt
/// everywhere on the domain: R'(t) = C / (a_f - k_f t)^2.
/// The domain is every t admitted by the guards of both trajectories.
class RatioModel {
 public:
  RatioModel(HyperbolicParams numerator, HyperbolicParams denominator) noexcept
      : numerator_(numerator), denominator_(denominator) {}

  const HyperbolicParams& numerator() const noexcept { return numerator_; }
  const HyperbolicParams& denominator() const noexcept { return denominator_; }

  double modulation_constant() const noexcept;
  RatioShape shape() const noexcept;

  bool admits(double t) const noexcept {
    return numerator_.admits(t) && denominator_.admits(t);
  }
  /// Latest admissible time.
  double guard_time() const noexcept;
  /// Earlier of the two singularity times; the right end of the domain.
  double domain_end() const noexcept;

 private:
  HyperbolicParams numerator_;
  HyperbolicParams denominator_;
};

RatioModel make_ratio(const HyperbolicParams& numerator,
                      const HyperbolicParams& denominator) noexcept;

double eval_ratio(const RatioModel& m, double t,
                  RatioPathway pathway = RatioPathway::direct);

double ratio_gradient(const RatioModel& m, double t);

/// d(ln R)/dt, the difference of the component growth rates.
double ratio_growth_rate(const RatioModel& m, double t);

/// Unique admissible time at which R(t) == level. Throws NoSolutionError
/// when the level is not positive, equals the asymptote k_g / k_f, or is only
/// reached past the domain end.
double time_at_ratio(const RatioModel& m, double level);

RatioShape classify_shape(const RatioModel& m) noexcept;

std::string_view to_string(RatioShape shape) noexcept;
std::string_view to_string(RatioPathway pathway) noexcept;

}  // namespace hypergrowth
