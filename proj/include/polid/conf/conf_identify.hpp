// Identification accelerated by environment configuration: for every
// hypothesis unit the baseline rule has not selected, repeatedly move
// omega to make that unit matter (ascending the importance-weighted
// objective), let the simulated agent re-train, collect fresh
// demonstrations, re-identify, and union the outcomes.
#pragma once

#include "polid/conf/importance.hpp"
#include "polid/ident/glr.hpp"

namespace polid {

struct ConfigSearchSpec {
  int episodes = 100;          // trajectories per identification round
  int attempts_per_unit = 3;   // configuration rounds per unselected unit
  int ascent_steps = 150;
  double ascent_learning_rate = 0.05;
  double zeta = 0.125;
  double fd_step = 1e-4;       // relative central-difference step in omega
  bool pool_datasets = false;  // reuse earlier rounds' data when identifying
  TrainSpec agent;             // simulated agent: its free set and training budget
  GlrOptions glr;
};

struct ConfRound {
  int unit = -1;
  int attempt = 0;
  Vec omega;
  double objective = 0.0;
  IndexSet newly_selected;
  bool aborted = false;  // objective went non-finite; round skipped
};

struct ConfIdentifyResult {
  IdentificationOutcome outcome;  // unioned selection
  IdentificationOutcome baseline;
  std::vector<ConfRound> rounds;
  Vec final_theta;
  Vec final_omega;
};

// Ascends the objective over omega with Adam; the omega gradient is a
// central finite difference. Trajectory-dependent terms that do not
// depend on omega are precomputed once.
Vec ascend_configuration(const std::vector<Trajectory>& trajectories, const PolicyModel& policy,
                         const Vec& theta, const ConfMdp& env, const Vec& omega0,
                         const IndexSet& target, const ConfigSearchSpec& spec);

ConfIdentifyResult identify_with_configuration(const ConfMdp& env, const PolicyModel& policy,
                                               double delta, const ConfigSearchSpec& spec,
                                               RuleMode rule, SeededRng& rng);

// Grouped-unit variant (see identify_groups_*).
ConfIdentifyResult identify_with_configuration_grouped(const ConfMdp& env,
                                                       const PolicyModel& policy, double delta,
                                                       const ConfigSearchSpec& spec, RuleMode rule,
                                                       const std::vector<IndexSet>& groups,
                                                       SeededRng& rng);

}  // namespace polid
