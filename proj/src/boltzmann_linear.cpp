#include "polid/policies/boltzmann_linear.hpp"

#include <cmath>
#include <cstring>
#include <unordered_map>

#include "polid/estimation/dataset.hpp"

namespace polid {

BoltzmannLinearPolicy::BoltzmannLinearPolicy(FeatureMap features, int action_count)
    : features_(std::move(features)), action_count_(action_count) {
  if (action_count_ < 2)
    throw std::invalid_argument("BoltzmannLinearPolicy: need at least two actions");
}

int BoltzmannLinearPolicy::action_index(const Action& a) const {
  if (a.size() != 1) throw std::invalid_argument("BoltzmannLinearPolicy: action must be a single index");
  if (!std::isfinite(a[0])) throw std::invalid_argument("BoltzmannLinearPolicy: non-finite action");
  const int i = static_cast<int>(a[0]);
  if (i < 0 || i >= action_count_)
    throw std::invalid_argument("BoltzmannLinearPolicy: action index out of range");
  return i;
}

Vec BoltzmannLinearPolicy::probabilities_from_features(const Vec& theta, const Vec& phi) const {
  const int k = action_count_ - 1;
  const int q = features_.output_dim;
  Vec logits(action_count_, 0.0);  // last entry stays 0
  double m = 0.0;
  for (int i = 0; i < k; ++i) {
    double z = 0.0;
    for (int j = 0; j < q; ++j) z += theta[i * q + j] * phi[j];
    logits[i] = z;
    if (z > m) m = z;
  }
  double denom = 0.0;
  for (int i = 0; i < action_count_; ++i) {
    logits[i] = std::exp(logits[i] - m);
    denom += logits[i];
  }
  for (int i = 0; i < action_count_; ++i) logits[i] /= denom;
  return logits;
}

Vec BoltzmannLinearPolicy::action_probabilities(const Vec& theta, const State& s) const {
  check_theta(theta);
  return probabilities_from_features(theta, features_.evaluate(s));
}

double BoltzmannLinearPolicy::log_prob(const Vec& theta, const State& s, const Action& a) const {
  check_theta(theta);
  const int ai = action_index(a);
  const Vec phi = features_.evaluate(s);
  const int k = action_count_ - 1;
  const int q = features_.output_dim;
  double m = 0.0;
  Vec logits(k);
  for (int i = 0; i < k; ++i) {
    double z = 0.0;
    for (int j = 0; j < q; ++j) z += theta[i * q + j] * phi[j];
    logits[i] = z;
    if (z > m) m = z;
  }
  double denom = std::exp(-m);
  for (int i = 0; i < k; ++i) denom += std::exp(logits[i] - m);
  const double log_partition = m + std::log(denom);
  const double z_a = (ai < k) ? logits[ai] : 0.0;
  return z_a - log_partition;
}

Vec BoltzmannLinearPolicy::grad_log_prob(const Vec& theta, const State& s, const Action& a) const {
  // (e_a - pi) kron phi, with e_a = 0 for the reference action.
  check_theta(theta);
  const int ai = action_index(a);
  const Vec phi = features_.evaluate(s);
  const Vec pi = probabilities_from_features(theta, phi);
  const int k = action_count_ - 1;
  const int q = features_.output_dim;
  Vec g(param_dim());
  for (int i = 0; i < k; ++i) {
    const double e = (i == ai) ? 1.0 : 0.0;
    const double c = e - pi[i];
    for (int j = 0; j < q; ++j) g[i * q + j] = c * phi[j];
  }
  return g;
}

Action BoltzmannLinearPolicy::sample_action(const Vec& theta, const State& s, SeededRng& rng) const {
  const Vec pi = action_probabilities(theta, s);
  return {static_cast<double>(rng.categorical(pi))};
}

Vec BoltzmannLinearPolicy::sufficient_statistic(const State& s, const Action& a) const {
  const int ai = action_index(a);
  const Vec phi = features_.evaluate(s);
  const int k = action_count_ - 1;
  const int q = features_.output_dim;
  Vec t(param_dim(), 0.0);
  if (ai < k)
    for (int j = 0; j < q; ++j) t[ai * q + j] = phi[j];
  return t;
}

Vec BoltzmannLinearPolicy::mean_sufficient_statistic(const Vec& theta, const State& s) const {
  check_theta(theta);
  const Vec phi = features_.evaluate(s);
  const Vec pi = probabilities_from_features(theta, phi);
  const int k = action_count_ - 1;
  const int q = features_.output_dim;
  Vec t(param_dim());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < q; ++j) t[i * q + j] = pi[i] * phi[j];
  return t;
}

Mat BoltzmannLinearPolicy::fisher_state(const Vec& theta, const State& s) const {
  check_theta(theta);
  const Vec phi = features_.evaluate(s);
  const Vec pi = probabilities_from_features(theta, phi);
  const int k = action_count_ - 1;
  Mat pp(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) pp(i, j) = (i == j ? pi[i] : 0.0) - pi[i] * pi[j];
  return kron(pp, outer(phi, phi));
}

double BoltzmannLinearPolicy::subgaussian_parameter() const {
  if (!features_.has_finite_bound())
    throw std::logic_error("subgaussian_parameter: feature map declares no finite bound");
  return 2.0 * features_.bound;
}

namespace {

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (double x : v) {
      std::uint64_t bits;
      std::memcpy(&bits, &x, sizeof(bits));
      h = (h ^ bits) * 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace

// NLL evaluator over a design compressed to unique states with
// per-action counts. Demonstration datasets from finite MDPs visit few
// distinct states, which makes the full-batch fits cheap.
class BoltzmannNll : public NllObjective {
public:
  BoltzmannNll(const BoltzmannLinearPolicy& policy, const DemoDataset& data) : policy_(policy) {
    data.validate();
    n_ = data.size();
    std::unordered_map<Vec, int, VecHash> index;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const Vec phi = policy_.features_.evaluate(data.states[i]);
      auto [it, inserted] = index.try_emplace(phi, static_cast<int>(features_.size()));
      if (inserted) {
        features_.push_back(phi);
        counts_.emplace_back(policy_.action_count_, 0.0);
        totals_.push_back(0.0);
      }
      const int u = it->second;
      const int a = static_cast<int>(data.actions[i][0]);
      if (a < 0 || a >= policy_.action_count_)
        throw std::invalid_argument("BoltzmannNll: action index out of range");
      counts_[u][a] += 1.0;
      totals_[u] += 1.0;
    }
  }

  int dim() const override { return policy_.param_dim(); }
  std::size_t sample_count() const override { return n_; }

  double value(const Vec& theta) const override { return eval(theta, nullptr); }

  double value_and_grad(const Vec& theta, Vec& grad) const override {
    grad.assign(policy_.param_dim(), 0.0);
    return eval(theta, &grad);
  }

private:
  double eval(const Vec& theta, Vec* grad) const {
    const int k = policy_.action_count_ - 1;
    const int q = policy_.features_.output_dim;
    if (static_cast<int>(theta.size()) != k * q)
      throw std::invalid_argument("BoltzmannNll: theta dimension mismatch");
    double nll = 0.0;
    Vec logits(k);
    for (std::size_t u = 0; u < features_.size(); ++u) {
      const Vec& phi = features_[u];
      double m = 0.0;
      for (int i = 0; i < k; ++i) {
        double z = 0.0;
        for (int j = 0; j < q; ++j) z += theta[i * q + j] * phi[j];
        logits[i] = z;
        if (z > m) m = z;
      }
      double denom = std::exp(-m);
      for (int i = 0; i < k; ++i) denom += std::exp(logits[i] - m);
      const double log_partition = m + std::log(denom);
      for (int a = 0; a < k; ++a)
        if (counts_[u][a] != 0.0) nll -= counts_[u][a] * logits[a];
      nll += totals_[u] * log_partition;
      if (grad) {
        for (int i = 0; i < k; ++i) {
          const double pi = std::exp(logits[i] - m) / denom;
          const double c = totals_[u] * pi - counts_[u][i];
          if (c == 0.0) continue;
          for (int j = 0; j < q; ++j) (*grad)[i * q + j] += c * phi[j];
        }
      }
    }
    const double inv_n = 1.0 / static_cast<double>(n_);
    if (grad)
      for (double& g : *grad) g *= inv_n;
    return nll * inv_n;
  }

  const BoltzmannLinearPolicy& policy_;
  std::size_t n_ = 0;
  std::vector<Vec> features_;
  std::vector<Vec> counts_;
  Vec totals_;
};

std::unique_ptr<NllObjective> BoltzmannLinearPolicy::make_nll(const DemoDataset& data) const {
  return std::make_unique<BoltzmannNll>(*this, data);
}

}  // namespace polid
