#include "torustat/regression.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "torustat/errors.hpp"
#include "torustat/toroidal.hpp"

namespace torustat {

RegressionModel from_fit(const FitResult& fit) {
  if (!fit.converged) {
    throw std::invalid_argument("from_fit: fit did not converge");
  }
  return RegressionModel{fit.params.mu1, fit.params.mu2, fit.params.lambda, fit};
}

Angle predict(const RegressionModel& m, Angle theta) {
  const double dt = theta.radians() - m.mu1.radians();
  return Angle(1.5 * kPi + m.mu2.radians() - m.lambda * dt);
}

QQReport qq_report(const AngleSeries& observed, const AngleSeries& predicted, AngleUnit unit) {
  if (observed.size() != predicted.size()) {
    throw DataError("qq_report: length mismatch");
  }
  if (observed.size() < 2) {
    throw DataError("qq_report: need at least two observations");
  }
  if (observed.has_missing() || predicted.has_missing()) {
    throw DataError("qq_report: missing entries not allowed");
  }
  std::vector<double> x = observed.radians();
  std::vector<double> y = predicted.radians();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());

  const double scale = unit == AngleUnit::degrees ? 180.0 / kPi : 1.0;
  QQReport report;
  report.unit = unit;
  report.pairs.reserve(x.size());
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    report.pairs.emplace_back(x[i] * scale, y[i] * scale);
    total += std::fabs(x[i] - y[i]) / std::sqrt(2.0);
  }
  report.mean_perp_distance = total * scale / static_cast<double>(x.size());
  return report;
}

ResidualSummary residual_summary(const AngleSeries& observed, const AngleSeries& predicted) {
  if (observed.size() != predicted.size()) {
    throw DataError("residual_summary: length mismatch");
  }
  if (observed.empty()) {
    throw DataError("residual_summary: empty series");
  }
  AngleSeries residuals;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    residuals.push_back(Angle(observed.at(i).radians() - predicted.at(i).radians()));
  }
  const CircularMeanResult mean = circular_mean(residuals);
  return ResidualSummary{mean.direction, mean.resultant_length};
}

}  // namespace torustat
