#ifndef CAUSALID_VARSET_HPP
#define CAUSALID_VARSET_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace causalid {

/// Index of a variable in its graph's declared node order.
using NodeId = std::uint32_t;

/// Set of variables, kept sorted by declared order. Iteration is therefore
/// always in declared order, which is the tie-break used everywhere.
class VarSet {
 public:
  using const_iterator = std::vector<NodeId>::const_iterator;

  VarSet() = default;
  VarSet(std::initializer_list<NodeId> ids);
  explicit VarSet(std::vector<NodeId> ids);

  bool contains(NodeId id) const;
  bool empty() const noexcept { return ids_.empty(); }
  std::size_t size() const noexcept { return ids_.size(); }
  const_iterator begin() const noexcept { return ids_.begin(); }
  const_iterator end() const noexcept { return ids_.end(); }
  const std::vector<NodeId>& ids() const noexcept { return ids_; }

  /// Smallest member in declared order. Undefined on an empty set.
  NodeId front() const { return ids_.front(); }

  void insert(NodeId id);
  void erase(NodeId id);

  bool is_subset_of(const VarSet& other) const;
  bool intersects(const VarSet& other) const;

  friend VarSet operator|(const VarSet& a, const VarSet& b);
  friend VarSet operator&(const VarSet& a, const VarSet& b);
  friend VarSet operator-(const VarSet& a, const VarSet& b);
  VarSet& operator|=(const VarSet& other);
  VarSet& operator-=(const VarSet& other);

  friend bool operator==(const VarSet&, const VarSet&) = default;
  friend auto operator<=>(const VarSet&, const VarSet&) = default;

 private:
  std::vector<NodeId> ids_;
};

}  // namespace causalid

#endif  // CAUSALID_VARSET_HPP
