#pragma once

// Hyperbolic growth trajectories y(t) = 1 / (a - k t).
//
// The reciprocal of such a trajectory is the decreasing straight line
// a - k t, which reaches zero (and y diverges) at the singularity time a / k.

namespace hypergrowth {

/// Evaluations require the reciprocal line to stay at or above this fraction
/// of its intercept.
inline constexpr double kSingularityGuard = 1e-9;

/// Parameters of a growth trajectory: the intercept of the reciprocal line
/// and the magnitude of its (negative) slope. Both must be finite and
/// strictly positive.
class HyperbolicParams {
 public:
  /// Throws ValidationError unless both arguments are finite and positive.
  HyperbolicParams(double intercept, double slope);

  double intercept() const noexcept { return intercept_; }
  double slope() const noexcept { return slope_; }

  /// Time at which the trajectory escapes to infinity.
  double singularity_time() const noexcept { return intercept_ / slope_; }

  /// Latest time accepted by the singularity guard.
  double guard_time() const noexcept;

  bool admits(double t) const noexcept {
    return intercept_ - slope_ * t >= kSingularityGuard * intercept_;
  }

  friend bool operator==(const HyperbolicParams&,
                         const HyperbolicParams&) = default;

 private:
  double intercept_;
  double slope_;
};

double eval_hyperbolic(const HyperbolicParams& p, double t);

/// The reciprocal line a - k t. Defined for every t.
double reciprocal_value(const HyperbolicParams& p, double t) noexcept;

double singularity_time(const HyperbolicParams& p) noexcept;

/// Time at which the trajectory reaches `size`; tends to the singularity
/// time from below as size grows. Throws DomainError for size <= 0.
double inverse_time(const HyperbolicParams& p, double size);

/// dy/dt = k / (a - k t)^2.
double derivative(const HyperbolicParams& p, double t);

/// (dy/dt) / y = k / (a - k t).
double growth_rate(const HyperbolicParams& p, double t);

}  // namespace hypergrowth
