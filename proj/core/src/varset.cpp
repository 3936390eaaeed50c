#include "causalid/varset.hpp"

#include <algorithm>
#include <iterator>

namespace causalid {

VarSet::VarSet(std::initializer_list<NodeId> ids) : VarSet(std::vector<NodeId>(ids)) {}

VarSet::VarSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VarSet::contains(NodeId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

void VarSet::insert(NodeId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

void VarSet::erase(NodeId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it != ids_.end() && *it == id) ids_.erase(it);
}

bool VarSet::is_subset_of(const VarSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool VarSet::intersects(const VarSet& other) const {
  auto a = ids_.begin();
  auto b = other.ids_.begin();
  while (a != ids_.end() && b != other.ids_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

VarSet operator|(const VarSet& a, const VarSet& b) {
  VarSet out;
  out.ids_.reserve(a.size() + b.size());
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

VarSet operator&(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

VarSet operator-(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

VarSet& VarSet::operator|=(const VarSet& other) {
  *this = *this | other;
  return *this;
}

VarSet& VarSet::operator-=(const VarSet& other) {
  *this = *this - other;
  return *this;
}

}  // namespace causalid
