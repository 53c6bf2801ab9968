// Off-distribution gradient estimation: per-prefix importance weights
// of trajectories collected under omega0 and evaluated under omega, the
// empirical 2-Renyi divergence, and the configuration-search objective
// built from them.
//
// Only environments whose transition model ignores the configuration
// are supported here (their transition ratios are exactly 1); for those
// the weight reduces to the initial-state density ratio.
#pragma once

#include <cstdint>

#include "polid/envs/conf_mdp.hpp"
#include "polid/estimation/dataset.hpp"
#include "polid/learn/gpomdp.hpp"

namespace polid {

// Number of configuration-module operations executed so far; the
// experiment harness uses this to assert that no-configuration runs
// never touch this machinery.
std::uint64_t configuration_op_count();
void reset_configuration_op_count();

// Weight of the first prefix_len steps: mu_omega(s0)/mu_omega0(s0)
// times the (unit) transition ratios. Returns 0 and sets *zero_support
// when s0 has no mass under omega.
double importance_weight(const Trajectory& traj, const ConfMdp& env, const Vec& omega,
                         const Vec& omega0, int prefix_len, bool* zero_support = nullptr);

// G(PO)MDP estimator with every (i, t) term importance-weighted;
// identical to gpomdp_gradient at omega = omega0. Throws when every
// trajectory has zero weight (disjoint supports).
Vec off_dist_gradient(const std::vector<Trajectory>& trajectories, const PolicyModel& policy,
                      const Vec& theta, const ConfMdp& env, const Vec& omega, const Vec& omega0,
                      double gamma);

// Empirical second moment of the full-length importance weights.
double renyi2_hat(const std::vector<Trajectory>& trajectories, const ConfMdp& env,
                  const Vec& omega, const Vec& omega0);

// ||off-distribution gradient restricted to target||^2
//   - zeta * sqrt(renyi2_hat / n)
double config_objective(const std::vector<Trajectory>& trajectories, const PolicyModel& policy,
                        const Vec& theta, const ConfMdp& env, const Vec& omega, const Vec& omega0,
                        const IndexSet& target, double zeta);

}  // namespace polid
