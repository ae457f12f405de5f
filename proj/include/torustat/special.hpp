#pragma once

namespace torustat {

/// Regularized upper incomplete gamma function Q(a, x) = Gamma(a, x) / Gamma(a),
/// a > 0, x >= 0. Series expansion below x < a + 1, Lentz continued fraction
/// above. Accurate to ~1e-14 relative.
double gamma_q(double a, double x);

/// Upper tail P(X > x) of a chi-square variable with df degrees of freedom.
double chi_square_sf(double x, double df);

/// Upper tail of the limiting Kolmogorov distribution,
/// Q(x) = 2 * sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2).
double kolmogorov_sf(double x);

/// sin(pi * x) with exact argument reduction about integers, so the zeros at
/// integer x are hit exactly and nearby values keep full relative accuracy.
double sin_pi(double x);

}  // namespace torustat
