#include "torustat/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "torustat/errors.hpp"

namespace torustat {

namespace {
// Below this resultant length the mean direction is numerically meaningless
// (antipodal pairs cancel to rounding noise rather than exact zero).
constexpr double kZeroResultantTol = 1e-12;
}  // namespace

AngleSeries::AngleSeries(std::vector<Angle> values, std::vector<bool> missing)
    : values_(std::move(values)), missing_(std::move(missing)) {
  if (values_.size() != missing_.size()) {
    throw std::invalid_argument("AngleSeries: values/mask size mismatch");
  }
}

std::size_t AngleSeries::missing_count() const {
  return static_cast<std::size_t>(std::count(missing_.begin(), missing_.end(), true));
}

Angle AngleSeries::at(std::size_t i) const {
  if (missing_.at(i)) {
    throw std::logic_error("AngleSeries::at: entry is missing");
  }
  return values_[i];
}

std::vector<Angle> AngleSeries::present_values() const {
  std::vector<Angle> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!missing_[i]) out.push_back(values_[i]);
  }
  return out;
}

std::vector<double> AngleSeries::radians() const {
  std::vector<double> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i].radians();
  return out;
}

CircularMeanResult circular_mean(const AngleSeries& series) {
  double sum_sin = 0.0;
  double sum_cos = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series.is_missing(i)) continue;
    const double v = series.at(i).radians();
    sum_sin += std::sin(v);
    sum_cos += std::cos(v);
    ++n;
  }
  if (n == 0) {
    throw DataError("circular_mean: no non-missing entries");
  }
  CircularMeanResult result;
  result.resultant_length = std::hypot(sum_sin, sum_cos) / static_cast<double>(n);
  if (result.resultant_length > kZeroResultantTol) {
    result.direction = Angle(std::atan2(sum_sin, sum_cos));
  }
  return result;
}

double circular_correlation(const AngleSeries& a, const AngleSeries& b) {
  if (a.size() != b.size()) {
    throw DataError("circular_correlation: length mismatch");
  }
  if (a.size() < 2) {
    throw DataError("circular_correlation: need at least two observations");
  }
  if (a.has_missing() || b.has_missing()) {
    throw DataError("circular_correlation: missing entries not allowed");
  }
  const auto mean_a = circular_mean(a);
  const auto mean_b = circular_mean(b);
  if (!mean_a.direction || !mean_b.direction) {
    throw DataError("circular_correlation: undefined circular mean");
  }
  const double abar = mean_a.direction->radians();
  const double bbar = mean_b.direction->radians();
  double num = 0.0, da2 = 0.0, db2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double sa = std::sin(a.at(i).radians() - abar);
    const double sb = std::sin(b.at(i).radians() - bbar);
    num += sa * sb;
    da2 += sa * sa;
    db2 += sb * sb;
  }
  // A constant series leaves only atan2 round-off in the deviations.
  const double floor = 1e-24 * static_cast<double>(a.size());
  if (da2 <= floor || db2 <= floor) {
    throw DataError("circular_correlation: zero dispersion about the mean");
  }
  return num / std::sqrt(da2 * db2);
}

AngleSeries axial_to_circular(std::span<const double> degrees, int multiplier) {
  return axial_to_circular(degrees, std::vector<bool>(degrees.size(), false), multiplier);
}

AngleSeries axial_to_circular(std::span<const double> degrees,
                              const std::vector<bool>& missing, int multiplier) {
  if (multiplier < 1) {
    throw std::invalid_argument("axial_to_circular: multiplier must be >= 1");
  }
  if (degrees.size() != missing.size()) {
    throw std::invalid_argument("axial_to_circular: values/mask size mismatch");
  }
  AngleSeries out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (missing[i]) {
      out.push_missing();
      continue;
    }
    const double x = degrees[i];
    if (!std::isfinite(x)) {
      throw std::domain_error("axial_to_circular: non-finite entry");
    }
    double deg = std::fmod(static_cast<double>(multiplier) * x, 360.0);
    if (deg < 0.0) deg += 360.0;
    if (deg >= 360.0) deg = 0.0;
    out.push_back(Angle::from_degrees(deg));
  }
  return out;
}

AngleSeries impute_circular_mean(const AngleSeries& series) {
  const auto mean = circular_mean(series);  // throws on all-missing
  if (!mean.direction) {
    throw DataError("impute_circular_mean: mean direction undefined (zero resultant)");
  }
  AngleSeries out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    out.push_back(series.is_missing(i) ? *mean.direction : series.at(i));
  }
  return out;
}

}  // namespace torustat
