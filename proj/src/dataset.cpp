#include "polid/estimation/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polid {

void DemoDataset::validate() const {
  if (states.empty()) throw std::invalid_argument("DemoDataset: empty dataset");
  if (states.size() != actions.size())
    throw std::invalid_argument("DemoDataset: state/action count mismatch");
  for (const auto& s : states)
    for (double v : s)
      if (!std::isfinite(v)) throw std::invalid_argument("DemoDataset: non-finite state");
  for (const auto& a : actions)
    for (double v : a)
      if (!std::isfinite(v)) throw std::invalid_argument("DemoDataset: non-finite action");
}

IndexSet::IndexSet(std::initializer_list<int> idx) : IndexSet(std::vector<int>(idx)) {}

IndexSet::IndexSet(std::vector<int> idx) : idx_(std::move(idx)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

IndexSet IndexSet::full(int d) {
  std::vector<int> v(d);
  for (int i = 0; i < d; ++i) v[i] = i;
  return IndexSet(std::move(v));
}

IndexSet IndexSet::from_mask(unsigned long long mask, int d) {
  std::vector<int> v;
  for (int i = 0; i < d; ++i)
    if (mask & (1ULL << i)) v.push_back(i);
  return IndexSet(std::move(v));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(idx_.begin(), idx_.end(), i);
}

IndexSet IndexSet::complement(int d) const {
  std::vector<int> v;
  v.reserve(d - size());
  for (int i = 0; i < d; ++i)
    if (!contains(i)) v.push_back(i);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::minus(int i) const {
  std::vector<int> v;
  v.reserve(idx_.size());
  for (int j : idx_)
    if (j != i) v.push_back(j);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::plus(int i) const {
  std::vector<int> v = idx_;
  v.push_back(i);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::union_with(const IndexSet& other) const {
  std::vector<int> v = idx_;
  v.insert(v.end(), other.idx_.begin(), other.idx_.end());
  return IndexSet(std::move(v));
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  std::vector<int> v;
  for (int j : idx_)
    if (other.contains(j)) v.push_back(j);
  return IndexSet(std::move(v));
}

void IndexSet::validate(int d) const {
  for (int j : idx_)
    if (j < 0 || j >= d) throw std::invalid_argument("IndexSet: index out of range");
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (i) os << ',';
    os << idx_[i];
  }
  os << '}';
  return os.str();
}

}  // namespace polid
