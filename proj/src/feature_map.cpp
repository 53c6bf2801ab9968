#include "polid/policies/feature_map.hpp"

namespace polid {

FeatureMap identity_features(int dim, double bound) {
  FeatureMap fm;
  fm.output_dim = dim;
  fm.bound = bound;
  fm.evaluate = [dim](const State& s) {
    if (static_cast<int>(s.size()) != dim)
      throw std::invalid_argument("identity_features: state dimension mismatch");
    return s;
  };
  return fm;
}

}  // namespace polid
