#include "polid/ident/glr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polid/special_functions.hpp"

namespace polid {

namespace {

double clamp_lambda(double lambda, double tol_nll) {
  if (lambda < 0.0) {
    if (lambda < -2.0 * tol_nll)
      throw std::runtime_error("glr_statistic: restricted fit beat the full fit by more than the "
                               "optimizer tolerance; a fit is broken");
    return 0.0;
  }
  return lambda;
}

IndexSet coords_from_groups(const IndexSet& group_set, const std::vector<IndexSet>& groups) {
  IndexSet out;
  for (int g : group_set) out = out.union_with(groups[g]);
  return out;
}

// Shared implementation for the plain and grouped rules: "units" are
// single coordinates or coordinate groups.
IdentificationOutcome simplified_over_units(const PolicyModel& policy, const DemoDataset& data,
                                            const std::vector<IndexSet>& units, double delta,
                                            const GlrOptions& opts) {
  const int d = policy.param_dim();
  const int n_units = static_cast<int>(units.size());
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("identify_simplified: delta must lie in (0,1)");

  IdentificationOutcome out;
  out.mode = RuleMode::simplified;
  out.delta = delta;

  const FitReport full = mle_fit(policy, data, IndexSet::full(d), opts.fit);

  if (policy.exponential_family()) {
    const Mat fim = empirical_fim(policy, full.theta_hat, data.states);
    out.fim_warning = min_eigenvalue_sym(fim, 1e-6) < 1e-8;
  }

  std::vector<int> selected_units;
  for (int u = 0; u < n_units; ++u) {
    const IndexSet pinned = units[u];
    const IndexSet free = pinned.complement(d);
    GlrResult res;
    try {
      res = glr_statistic(policy, data, free, full, opts);
    } catch (const std::exception&) {
      res.free_set = free;
      res.pinned_set = pinned;
      res.dof = pinned.size();
      res.inconclusive = true;
      out.inconclusive.push_back(u);
    }
    res.critical = critical_value(res.dof, delta, RuleMode::simplified, n_units);
    res.rejected = !res.inconclusive && res.lambda > res.critical;
    if (res.rejected) selected_units.push_back(u);
    out.tests.push_back(std::move(res));
  }
  out.selected_sets.push_back(IndexSet(std::move(selected_units)));
  return out;
}

IdentificationOutcome combinatorial_over_units(const PolicyModel& policy, const DemoDataset& data,
                                               const std::vector<IndexSet>& units, double delta,
                                               const GlrOptions& opts) {
  const int d = policy.param_dim();
  const int n_units = static_cast<int>(units.size());
  if (n_units > 20)
    throw std::invalid_argument("identify_combinatorial: more than 20 units (2^d fits)");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("identify_combinatorial: delta must lie in (0,1)");

  IdentificationOutcome out;
  out.mode = RuleMode::combinatorial;
  out.delta = delta;

  const FitReport full = mle_fit(policy, data, IndexSet::full(d), opts.fit);
  const std::size_t n_subsets = 1ULL << n_units;

  // lambda for every free unit-set, each subset fit exactly once.
  std::vector<double> lambda(n_subsets, 0.0);
  std::vector<char> bad(n_subsets, 0);
  std::vector<unsigned long long> by_cardinality(n_subsets);
  for (std::size_t m = 0; m < n_subsets; ++m) by_cardinality[m] = m;
  std::sort(by_cardinality.begin(), by_cardinality.end(),
            [](unsigned long long a, unsigned long long b) {
              const int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
              return ca != cb ? ca < cb : a < b;
            });

  const unsigned long long full_mask = n_subsets - 1;
  for (unsigned long long mask : by_cardinality) {
    const IndexSet unit_set = IndexSet::from_mask(mask, n_units);
    const IndexSet free = coords_from_groups(unit_set, units);
    GlrResult rec;
    rec.free_set = unit_set;
    rec.pinned_set = unit_set.complement(n_units);
    rec.dof = coords_from_groups(rec.pinned_set, units).size();
    try {
      rec.lambda = glr_statistic(policy, data, free, full, opts).lambda;
      lambda[mask] = rec.lambda;
    } catch (const std::exception&) {
      bad[mask] = 1;
      rec.inconclusive = true;
    }
    rec.critical = mask == full_mask
                       ? 0.0
                       : critical_value(rec.dof, delta, RuleMode::combinatorial, n_units);
    rec.rejected = !rec.inconclusive && mask != full_mask && rec.lambda > rec.critical;
    out.tests.push_back(std::move(rec));
  }

  for (unsigned long long mask : by_cardinality) {
    if (bad[mask]) continue;
    const IndexSet unit_set = IndexSet::from_mask(mask, n_units);
    // Sufficiency: the tested pin is not rejected (the full free set
    // pins nothing and always qualifies).
    if (mask != full_mask) {
      const int pinned = d - coords_from_groups(unit_set, units).size();
      const double c = critical_value(pinned, delta, RuleMode::combinatorial, n_units);
      if (!(lambda[mask] <= c)) continue;
    }
    // Necessity: every one-smaller free set must be rejected.
    bool necessary = true;
    for (int u : unit_set) {
      const unsigned long long sub = mask & ~(1ULL << u);
      const IndexSet sub_units = IndexSet::from_mask(sub, n_units);
      const int sub_pinned = d - coords_from_groups(sub_units, units).size();
      const double c_sub = critical_value(sub_pinned, delta, RuleMode::combinatorial, n_units);
      if (bad[sub] || !(lambda[sub] > c_sub)) {
        necessary = false;
        break;
      }
    }
    if (necessary) out.selected_sets.push_back(unit_set);
  }
  return out;
}

std::vector<IndexSet> singleton_units(int d) {
  std::vector<IndexSet> units;
  units.reserve(d);
  for (int i = 0; i < d; ++i) units.push_back(IndexSet{i});
  return units;
}

}  // namespace

GlrResult glr_statistic(const PolicyModel& policy, const DemoDataset& data,
                        const IndexSet& free_restricted, const GlrOptions& opts) {
  const FitReport full = mle_fit(policy, data, IndexSet::full(policy.param_dim()), opts.fit);
  return glr_statistic(policy, data, free_restricted, full, opts);
}

GlrResult glr_statistic(const PolicyModel& policy, const DemoDataset& data,
                        const IndexSet& free_restricted, const FitReport& full_fit,
                        const GlrOptions& opts) {
  const int d = policy.param_dim();
  free_restricted.validate(d);

  GlrResult res;
  res.free_set = free_restricted;
  res.pinned_set = free_restricted.complement(d);
  res.dof = res.pinned_set.size();

  const FitReport restricted = mle_fit(policy, data, free_restricted, opts.fit);
  res.lambda = clamp_lambda(2.0 * (restricted.nll - full_fit.nll), opts.tol_nll);
  return res;
}

double critical_value(int pinned_count, double delta, RuleMode mode, int d) {
  if (pinned_count < 1 || pinned_count > std::max(d, pinned_count))
    throw std::invalid_argument("critical_value: pinned_count out of range");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("critical_value: delta must lie in (0,1)");
  if (d < 1) throw std::invalid_argument("critical_value: d must be >= 1");

  if (mode == RuleMode::simplified)
    return chi2_quantile({1, 1.0 - delta / static_cast<double>(d)});

  // Combinatorial: tail = delta / 2^d, through log space once the tail
  // becomes too small to subtract from one.
  const double log_tail = std::log(delta) - static_cast<double>(d) * std::log(2.0);
  if (d <= 30 && std::exp(log_tail) > 1e-12)
    return chi2_quantile({pinned_count, 1.0 - std::exp(log_tail)});
  return chi2_quantile_from_log_tail(pinned_count, log_tail);
}

IdentificationOutcome identify_simplified(const PolicyModel& policy, const DemoDataset& data,
                                          double delta, const GlrOptions& opts) {
  return simplified_over_units(policy, data, singleton_units(policy.param_dim()), delta, opts);
}

IdentificationOutcome identify_combinatorial(const PolicyModel& policy, const DemoDataset& data,
                                             double delta, const GlrOptions& opts) {
  return combinatorial_over_units(policy, data, singleton_units(policy.param_dim()), delta, opts);
}

IdentificationOutcome identify_groups_simplified(const PolicyModel& policy,
                                                 const DemoDataset& data,
                                                 const std::vector<IndexSet>& groups, double delta,
                                                 const GlrOptions& opts) {
  return simplified_over_units(policy, data, groups, delta, opts);
}

IdentificationOutcome identify_groups_combinatorial(const PolicyModel& policy,
                                                    const DemoDataset& data,
                                                    const std::vector<IndexSet>& groups,
                                                    double delta, const GlrOptions& opts) {
  return combinatorial_over_units(policy, data, groups, delta, opts);
}

IdentificationMetrics identification_metrics(const IdentificationOutcome& outcome,
                                             const IndexSet& true_set, int d) {
  const auto count_errors = [&](const IndexSet& sel) {
    int false_pos = 0, false_neg = 0;
    for (int i : sel)
      if (!true_set.contains(i)) ++false_pos;
    for (int i : true_set)
      if (!sel.contains(i)) ++false_neg;
    return std::pair<int, int>{false_pos, false_neg};
  };

  const IndexSet* best = nullptr;
  int best_cost = -1;
  for (const auto& sel : outcome.selected_sets) {
    const auto [fp, fn] = count_errors(sel);
    const int cost = fp + fn;
    if (!best || cost < best_cost || (cost == best_cost && sel.size() < best->size())) {
      best = &sel;
      best_cost = cost;
    }
  }

  IdentificationMetrics m;
  if (!best) {  // combinatorial rule accepted nothing
    m.alpha_hat = 0.0;
    m.beta_hat = true_set.empty() ? 0.0 : 1.0;
    m.exact_match = false;
    return m;
  }
  const auto [fp, fn] = count_errors(*best);
  const int uncontrolled = d - true_set.size();
  m.alpha_hat = uncontrolled == 0 ? 0.0 : static_cast<double>(fp) / uncontrolled;
  m.beta_hat = true_set.empty() ? 0.0 : static_cast<double>(fn) / true_set.size();
  m.exact_match = fp == 0 && fn == 0;
  return m;
}

}  // namespace polid
