#pragma once

namespace hypergrowth {

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and
/// 0 <= x <= 1, by the Lentz continued fraction on whichever of x and 1 - x
/// converges faster. Absolute accuracy better than 1e-10 in double.
/// Throws DomainError for arguments outside that range.
double regularized_incomplete_beta(double a, double b, double x);

/// Upper tail P(F > f) of Fisher's F distribution with (d1, d2) degrees of
/// freedom.
double fisher_f_survival(double f, double d1, double d2);

}  // namespace hypergrowth
