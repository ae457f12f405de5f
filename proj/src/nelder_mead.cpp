#include "torustat/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace torustat {

namespace {
constexpr double kReflection = 1.0;
constexpr double kExpansion = 2.0;
constexpr double kContraction = 0.5;
constexpr double kShrink = 0.5;
}  // namespace

NelderMeadResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                      std::vector<double> x0, const NelderMeadOptions& options) {
  const std::size_t dim = x0.size();
  if (dim == 0) {
    throw std::invalid_argument("nelder_mead_minimize: empty start point");
  }

  std::vector<std::vector<double>> simplex(dim + 1, x0);
  for (std::size_t j = 0; j < dim; ++j) {
    simplex[j + 1][j] += options.initial_step;
  }
  std::vector<double> values(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(dim + 1);
  NelderMeadResult result;

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[dim - 1];

    result.iterations = iter;
    double spread = 0.0;
    for (std::size_t i = 0; i <= dim; ++i) {
      spread = std::max(spread, std::fabs(values[i] - values[best]));
    }
    if (spread < options.f_spread_tolerance) {
      result.converged = true;
      break;
    }

    // Centroid of all but the worst vertex.
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const auto blend = [&](double coeff) {
      std::vector<double> x(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        x[j] = centroid[j] + coeff * (simplex[worst][j] - centroid[j]);
      }
      return x;
    };

    std::vector<double> reflected = blend(-kReflection);
    const double f_reflected = f(reflected);

    if (f_reflected < values[best]) {
      std::vector<double> expanded = blend(-kExpansion);
      const double f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = std::move(expanded);
        values[worst] = f_expanded;
      } else {
        simplex[worst] = std::move(reflected);
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = std::move(reflected);
      values[worst] = f_reflected;
      continue;
    }

    // Contract toward the better of the worst vertex and its reflection.
    const bool outside = f_reflected < values[worst];
    std::vector<double> contracted = blend(outside ? -kContraction : kContraction);
    const double f_contracted = f(contracted);
    if (f_contracted < std::min(values[worst], f_reflected)) {
      simplex[worst] = std::move(contracted);
      values[worst] = f_contracted;
      continue;
    }

    // Shrink toward the best vertex.
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        simplex[i][j] = simplex[best][j] + kShrink * (simplex[i][j] - simplex[best][j]);
      }
      values[i] = f(simplex[i]);
    }
  }

  const std::size_t best =
      static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  result.x = simplex[best];
  result.f = values[best];
  return result;
}

}  // namespace torustat
