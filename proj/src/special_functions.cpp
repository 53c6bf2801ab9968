#include "polid/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polid {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-16;

// Series representation, converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Modified Lentz continued fraction for Q(a, x), x >= a + 1.
// Returns the fraction only; the exp prefactor is applied by callers so
// the log form can reuse it.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double lower_regularized_gamma(double a, double x) {
  if (!(a > 0.0)) throw std::invalid_argument("lower_regularized_gamma: a must be positive");
  if (x < 0.0) throw std::invalid_argument("lower_regularized_gamma: x must be non-negative");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  const double q = std::exp(-x + a * std::log(x) - std::lgamma(a)) * gamma_q_cf(a, x);
  return 1.0 - q;
}

double upper_regularized_gamma(double a, double x) {
  if (x < a + 1.0) return 1.0 - lower_regularized_gamma(a, x);
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * gamma_q_cf(a, x);
}

double log_upper_regularized_gamma(double a, double x) {
  if (x < a + 1.0) {
    const double q = 1.0 - gamma_p_series(a, x);
    if (q <= 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(q);
  }
  return -x + a * std::log(x) - std::lgamma(a) + std::log(gamma_q_cf(a, x));
}

double chi2_cdf(int dof, double x) {
  if (dof < 1) throw std::invalid_argument("chi2_cdf: dof must be >= 1");
  if (x <= 0.0) return 0.0;
  return lower_regularized_gamma(0.5 * dof, 0.5 * x);
}

double chi2_quantile(const Chi2Spec& spec) {
  if (spec.dof < 1) throw std::invalid_argument("chi2_quantile: dof must be >= 1");
  if (!(spec.prob >= 0.0) || spec.prob >= 1.0)
    throw std::invalid_argument("chi2_quantile: prob must lie in [0, 1)");
  if (spec.prob == 0.0) return 0.0;

  const double a = 0.5 * spec.dof;
  // Wilson-Hilferty starting point, then safeguarded Newton.
  const double z = [&] {
    // Acklam-style rational approximation of the normal quantile is
    // overkill here; a coarse start is fine since we bracket anyway.
    double lo = -10.0, hi = 10.0;
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (lo + hi);
      (0.5 * std::erfc(-mid / std::sqrt(2.0)) < spec.prob ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  const double k = static_cast<double>(spec.dof);
  double x = k * std::pow(1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k)), 3.0);
  if (!(x > 0.0)) x = 0.5;

  double lo = 0.0;
  double hi = std::max(x * 4.0, k + 50.0);
  while (chi2_cdf(spec.dof, hi) < spec.prob) hi *= 2.0;

  for (int i = 0; i < 200; ++i) {
    const double f = chi2_cdf(spec.dof, x) - spec.prob;
    if (f > 0.0) hi = x; else lo = x;
    const double pdf = std::exp((a - 1.0) * std::log(0.5 * x) - 0.5 * x - std::lgamma(a)) * 0.5;
    double next = (pdf > 0.0) ? x - f / pdf : 0.5 * (lo + hi);
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) < 1e-13 * std::max(1.0, x)) { x = next; break; }
    x = next;
  }
  return x;
}

double chi2_quantile_from_log_tail(int dof, double log_tail) {
  if (dof < 1) throw std::invalid_argument("chi2_quantile_from_log_tail: dof must be >= 1");
  if (!(log_tail < 0.0))
    throw std::invalid_argument("chi2_quantile_from_log_tail: log_tail must be negative");
  const double a = 0.5 * dof;
  // log Q is strictly decreasing in x; bracket then bisect.
  double lo = static_cast<double>(dof);
  while (log_upper_regularized_gamma(a, 0.5 * lo) < log_tail && lo > 1e-12) lo *= 0.5;
  double hi = std::max(2.0 * lo, static_cast<double>(dof) + 4.0);
  while (log_upper_regularized_gamma(a, 0.5 * hi) > log_tail) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (log_upper_regularized_gamma(a, 0.5 * mid) > log_tail) lo = mid; else hi = mid;
    if (hi - lo < 1e-12 * std::max(1.0, hi)) break;
  }
  return 0.5 * (lo + hi);
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::fabs(f - static_cast<double>(i) / n));
    d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

double ks_pvalue(double d, std::size_t n) {
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d;
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = 2.0 * std::pow(-1.0, j - 1) * std::exp(-2.0 * j * j * lambda * lambda);
    sum += term;
    if (std::fabs(term) < 1e-12) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

}  // namespace polid
