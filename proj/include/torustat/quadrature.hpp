#pragma once

#include <functional>

namespace torustat {

struct QuadratureOptions {
  double abs_tolerance = 1e-10;
  int max_depth = 15;  // at most 2^max_depth panels
};

/// Integrates f over [a, b] with an adaptive Gauss-Kronrod (7,15) rule,
/// bisecting any panel whose error estimate exceeds its share of the
/// tolerance. Throws NumericError when the panel budget is exhausted
/// before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options = {});

}  // namespace torustat
