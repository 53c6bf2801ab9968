// State feature function with a declared L2 bound (infinite when the
// bound is not known).
#pragma once

#include <functional>
#include <limits>

#include "polid/linalg.hpp"

namespace polid {

using State = Vec;
using Action = Vec;

struct FeatureMap {
  int output_dim = 0;
  // Upper bound on sup_s ||phi(s)||_2; infinity means undeclared.
  double bound = std::numeric_limits<double>::infinity();
  std::function<Vec(const State&)> evaluate;

  bool has_finite_bound() const { return std::isfinite(bound); }
};

// phi(s) = s itself; convenient for synthetic instances.
FeatureMap identity_features(int dim, double bound = std::numeric_limits<double>::infinity());

}  // namespace polid
