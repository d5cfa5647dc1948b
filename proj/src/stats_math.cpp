#include "tlt/stats_math.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tlt/errors.hpp"

namespace tlt {

namespace {

constexpr int kBetaCfMaxIter = 2000;
constexpr double kBetaCfEps = 1.0e-15;
const double kFpMin = std::numeric_limits<double>::min() / kBetaCfEps;

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Modified Lentz continued fraction for I_x(a,b); valid for
// x < (a+1)/(a+b+2), the caller handles the symmetric half.
double beta_cf(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kBetaCfMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kBetaCfEps) return h;
  }
  throw NumericError("reg_inc_beta: continued fraction did not converge (a=" +
                     std::to_string(a) + ", b=" + std::to_string(b) +
                     ", x=" + std::to_string(x) + ")");
}

}  // namespace

double std_normal_cdf(double z) {
  if (!std::isfinite(z)) {
    throw std::domain_error("std_normal_cdf: input must be finite");
  }
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

double reg_inc_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("reg_inc_beta: a and b must be positive and finite");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("reg_inc_beta: x must lie in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front =
      std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double beta_quantile(double a, double b, double q) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("beta_quantile: a and b must be positive");
  }
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error("beta_quantile: q must lie in (0, 1)");
  }
  constexpr int kMaxIter = 200;
  constexpr double kResidTarget = 1.0e-12;
  constexpr double kResidAccept = 1.0e-10;
  const double log_b = log_beta(a, b);
  double lo = 0.0;
  double hi = 1.0;
  double x = a / (a + b);  // start at the mean
  double resid = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    resid = reg_inc_beta(a, b, x) - q;
    if (std::fabs(resid) <= kResidTarget) return x;
    if (resid > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    double next = 0.5 * (lo + hi);  // bisection fallback
    const double pdf = std::exp((a - 1.0) * std::log(x) +
                                (b - 1.0) * std::log1p(-x) - log_b);
    if (std::isfinite(pdf) && pdf > 0.0) {
      const double newton = x - resid / pdf;
      if (newton > lo && newton < hi) next = newton;
    }
    if (next == x) break;  // bracket exhausted at double resolution
    x = next;
  }
  if (std::fabs(resid) <= kResidAccept) return x;
  throw NumericError("beta_quantile: no convergence for a=" + std::to_string(a) +
                     ", b=" + std::to_string(b) + ", q=" + std::to_string(q));
}

double order_stat_quantile(const OrderStatisticLaw& law, double q) {
  if (law.j < 1 || law.m < 1 || law.j > law.m) {
    throw std::domain_error("order_stat_quantile: need 1 <= j <= m");
  }
  return beta_quantile(static_cast<double>(law.j),
                       static_cast<double>(law.m - law.j + 1), q);
}

}  // namespace tlt
