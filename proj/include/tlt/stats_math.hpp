#pragma once

#include <cstddef>

namespace tlt {

// Law of the j-th order statistic of m iid uniform(0,1) draws: Beta(j, m-j+1).
struct OrderStatisticLaw {
  std::size_t j = 1;  // rank, 1 <= j <= m
  std::size_t m = 1;  // sample size
};

// Standard normal CDF Phi(z). Throws std::domain_error on non-finite input.
double std_normal_cdf(double z);

// Regularized incomplete beta I_x(a, b), the Beta(a, b) CDF at x.
// Continued-fraction evaluation with the symmetry switch at x = (a+1)/(a+b+2).
double reg_inc_beta(double a, double b, double x);

// Inverse of reg_inc_beta in x for q in (0,1). Bracketed Newton search on
// [0,1] with bisection fallback; the result satisfies
// |reg_inc_beta(a, b, x) - q| <= 1e-10 or a NumericError is thrown.
double beta_quantile(double a, double b, double q);

// Quantile of the j-th order statistic of m uniforms at level q.
double order_stat_quantile(const OrderStatisticLaw& law, double q);

}  // namespace tlt
