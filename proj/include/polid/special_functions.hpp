// Chi-square distribution machinery: regularized incomplete gamma,
// CDF, quantile (plain and far-tail log-space form), and a
// Kolmogorov-Smirnov helper for calibration checks.
#pragma once

#include <functional>
#include <vector>

namespace polid {

struct Chi2Spec {
  int dof = 1;       // >= 1
  double prob = 0.0; // in [0, 1)
};

// Regularized lower incomplete gamma P(a, x); series + continued fraction.
double lower_regularized_gamma(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double upper_regularized_gamma(double a, double x);

// log Q(a, x); usable where Q underflows (x well past a).
double log_upper_regularized_gamma(double a, double x);

double chi2_cdf(int dof, double x);

// Inverse CDF; rejects dof < 1 and prob outside [0, 1).
double chi2_quantile(const Chi2Spec& spec);

// Solves Q(dof/2, x/2) = exp(log_tail); for tails too small to express
// as 1 - prob in double precision.
double chi2_quantile_from_log_tail(int dof, double log_tail);

// Two-sided KS distance between samples and a reference CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// Asymptotic Kolmogorov p-value for distance d at sample size n.
double ks_pvalue(double d, std::size_t n);

}  // namespace polid
