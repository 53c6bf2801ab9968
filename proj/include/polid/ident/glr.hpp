// Generalized likelihood-ratio tests over pinned coordinate sets,
// Bonferroni-corrected critical values, and the two identification
// rules built from them, plus empirical error metrics.
#pragma once

#include <optional>

#include "polid/estimation/mle.hpp"

namespace polid {

enum class RuleMode { simplified, combinatorial };

struct GlrOptions {
  FitOptions fit;
  // Negative lambda inside [-tol_nll, 0] is optimizer noise and clamps
  // to zero; anything more negative indicates a broken fit and throws.
  double tol_nll = 1e-3;
};

struct GlrResult {
  IndexSet free_set;    // restricted free coordinates
  IndexSet pinned_set;  // complement: the hypothesis "these are zero"
  double lambda = 0.0;
  int dof = 0;  // number of pinned coordinates
  double critical = 0.0;
  bool rejected = false;
  bool inconclusive = false;  // a fit failed; treated as a non-rejection
};

// lambda = 2 * (nll(restricted fit) - nll(full fit)), clamped at zero.
GlrResult glr_statistic(const PolicyModel& policy, const DemoDataset& data,
                        const IndexSet& free_restricted, const GlrOptions& opts = {});

// As above, reusing a precomputed unrestricted fit.
GlrResult glr_statistic(const PolicyModel& policy, const DemoDataset& data,
                        const IndexSet& free_restricted, const FitReport& full_fit,
                        const GlrOptions& opts = {});

// Bonferroni-corrected chi-square critical value. d is the number of
// simultaneous hypotheses: the simplified mode uses chi2_{1, 1-delta/d},
// the combinatorial mode chi2_{pinned, 1-delta/2^d} (computed through
// the log-space tail for large d).
double critical_value(int pinned_count, double delta, RuleMode mode, int d);

struct IdentificationOutcome {
  RuleMode mode = RuleMode::simplified;
  double delta = 0.0;
  // Simplified: exactly one entry. Combinatorial: every accepted set.
  std::vector<IndexSet> selected_sets;
  std::vector<GlrResult> tests;
  bool fim_warning = false;            // empirical FIM nearly singular
  std::vector<int> inconclusive;       // coordinates whose test failed

  const IndexSet& selected() const { return selected_sets.front(); }
};

IdentificationOutcome identify_simplified(const PolicyModel& policy, const DemoDataset& data,
                                          double delta, const GlrOptions& opts = {});

// Exhaustive rule over all 2^d free sets; demands d <= 20.
IdentificationOutcome identify_combinatorial(const PolicyModel& policy, const DemoDataset& data,
                                             double delta, const GlrOptions& opts = {});

// Variants whose hypothesis units are disjoint coordinate groups
// (e.g. all first-layer weights reading one network input). Returned
// index sets live in group-index space.
IdentificationOutcome identify_groups_simplified(const PolicyModel& policy,
                                                 const DemoDataset& data,
                                                 const std::vector<IndexSet>& groups, double delta,
                                                 const GlrOptions& opts = {});
IdentificationOutcome identify_groups_combinatorial(const PolicyModel& policy,
                                                    const DemoDataset& data,
                                                    const std::vector<IndexSet>& groups,
                                                    double delta, const GlrOptions& opts = {});

struct IdentificationMetrics {
  double alpha_hat = 0.0;  // uncontrolled coordinates wrongly selected
  double beta_hat = 0.0;   // controlled coordinates missed
  bool exact_match = false;
};

// For combinatorial outcomes the metrics use the member of the accepted
// family closest to the truth; exact_match says the truth itself was
// accepted.
IdentificationMetrics identification_metrics(const IdentificationOutcome& outcome,
                                             const IndexSet& true_set, int d);

}  // namespace polid
