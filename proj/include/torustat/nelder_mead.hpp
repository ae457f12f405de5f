#pragma once

#include <functional>
#include <vector>

namespace torustat {

struct NelderMeadOptions {
  int max_iterations = 2000;
  double f_spread_tolerance = 1e-9;  // stop when max_i |f_i - f_best| falls below
  double initial_step = 0.5;         // per-coordinate simplex offset
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Minimizes f by the Nelder-Mead simplex method with the classic
/// coefficients (reflection 1, expansion 2, contraction 0.5, shrink 0.5).
/// Deterministic: no randomness, ties resolved by index order.
NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      std::vector<double> x0,
                                      const NelderMeadOptions& options = {});

}  // namespace torustat
