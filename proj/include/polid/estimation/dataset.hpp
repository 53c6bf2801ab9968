// Demonstration datasets and coordinate index sets.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "polid/linalg.hpp"
#include "polid/policies/feature_map.hpp"

namespace polid {

struct DemoDataset {
  std::vector<State> states;
  std::vector<Action> actions;
  Vec source_config;  // omega the data was collected under; may be empty

  std::size_t size() const { return states.size(); }
  void push(State s, Action a) {
    states.push_back(std::move(s));
    actions.push_back(std::move(a));
  }
  void validate() const;
};

// Sorted set of coordinate indices, interpreted throughout as the FREE
// (controllable) coordinates; the complement is pinned to zero.
class IndexSet {
public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> idx);
  explicit IndexSet(std::vector<int> idx);

  static IndexSet full(int d);
  static IndexSet from_mask(unsigned long long mask, int d);

  bool contains(int i) const;
  int size() const { return static_cast<int>(idx_.size()); }
  bool empty() const { return idx_.empty(); }

  IndexSet complement(int d) const;
  IndexSet minus(int i) const;
  IndexSet plus(int i) const;
  IndexSet union_with(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;

  const std::vector<int>& indices() const { return idx_; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

  bool operator==(const IndexSet& other) const { return idx_ == other.idx_; }

  // Throws if any index falls outside [0, d).
  void validate(int d) const;

  std::string to_string() const;

private:
  std::vector<int> idx_;
};

}  // namespace polid
