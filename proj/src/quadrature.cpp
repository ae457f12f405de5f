#include "torustat/quadrature.hpp"

#include <cmath>

#include "torustat/errors.hpp"

namespace torustat {

namespace {

// Gauss-Kronrod (7,15) abscissae and weights on [-1, 1] (QUADPACK dqk15).
// Even-indexed abscissae are the Kronrod extension, odd-indexed ones are the
// embedded 7-point Gauss nodes.
constexpr double kAbscissae[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double integral;
  double error;
};

PanelResult gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kAbscissae[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += sum * kKronrodWeights[j];
    if (j % 2 == 1) gauss += sum * kGaussWeights[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::fabs(kronrod - gauss)};
}

double integrate_panel(const std::function<double(double)>& f, double a, double b,
                       double tolerance, int depth_left, long& panels_left) {
  const PanelResult r = gauss_kronrod_15(f, a, b);
  if (r.error <= tolerance || !std::isfinite(r.integral)) {
    return r.integral;
  }
  if (depth_left == 0 || panels_left <= 0) {
    throw NumericError("integrate: panel budget exhausted before reaching tolerance");
  }
  --panels_left;
  const double mid = 0.5 * (a + b);
  return integrate_panel(f, a, mid, 0.5 * tolerance, depth_left - 1, panels_left) +
         integrate_panel(f, mid, b, 0.5 * tolerance, depth_left - 1, panels_left);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options) {
  if (a == b) return 0.0;
  long panels_left = 1L << options.max_depth;
  return integrate_panel(f, a, b, options.abs_tolerance, options.max_depth, panels_left);
}

}  // namespace torustat
