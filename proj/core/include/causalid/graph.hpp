#ifndef CAUSALID_GRAPH_HPP
#define CAUSALID_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "causalid/varset.hpp"

namespace causalid {

struct Edge {
  NodeId from;
  NodeId to;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Acyclic directed mixed graph over observed variables. Directed edges are
/// causal arrows; a bidirected edge marks an unobserved common cause.
///
/// Immutable after construction. The declared node order is the tie-break
/// order for every downstream algorithm.
class Admg {
 public:
  Admg() = default;

  /// Throws GraphError on duplicate names, self-loops, unknown endpoints or a
  /// directed cycle. Duplicate edges collapse; bidirected pairs are stored
  /// with `from < to`.
  Admg(std::vector<std::string> names, std::vector<Edge> directed,
       std::vector<Edge> bidirected);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(NodeId id) const { return names_.at(id); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<NodeId> find(std::string_view name) const;
  /// Throws GraphError for an undeclared name.
  NodeId id(std::string_view name) const;

  std::span<const NodeId> parents(NodeId id) const { return parents_.at(id); }
  std::span<const NodeId> children(NodeId id) const { return children_.at(id); }
  std::span<const NodeId> siblings(NodeId id) const { return siblings_.at(id); }

  const std::vector<Edge>& directed_edges() const noexcept { return directed_; }
  const std::vector<Edge>& bidirected_edges() const noexcept { return bidirected_; }

  VarSet all() const;
  VarSet varset(std::span<const std::string> names) const;
  /// "{A,X,W}" in declared order.
  std::string format(const VarSet& set) const;

  friend bool operator==(const Admg& a, const Admg& b) {
    return a.names_ == b.names_ && a.directed_ == b.directed_ &&
           a.bidirected_ == b.bidirected_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> directed_;
  std::vector<Edge> bidirected_;
  std::vector<std::vector<NodeId>> parents_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::vector<NodeId>> siblings_;
};

/// A permutation of a node set consistent with the directed edges.
class TopoOrder {
 public:
  explicit TopoOrder(std::vector<NodeId> order) : order_(std::move(order)) {}

  std::size_t size() const noexcept { return order_.size(); }
  NodeId operator[](std::size_t i) const { return order_.at(i); }
  std::span<const NodeId> nodes() const noexcept { return order_; }
  /// The first `i` nodes of the order.
  VarSet prefix(std::size_t i) const;
  /// Position of `id` in the order; size() when absent.
  std::size_t position(NodeId id) const;

 private:
  std::vector<NodeId> order_;
};

/// Kahn's algorithm on G[scope]; among ready nodes the earliest declared wins.
TopoOrder topological_order(const Admg& g, const VarSet& scope);

/// Bidirected-connected blocks of G[scope], ordered by their minimum member.
std::vector<VarSet> c_components(const Admg& g, const VarSet& scope);

/// The block of c_components(g, scope) containing `x`.
VarSet c_component_of(const Admg& g, const VarSet& scope, NodeId x);

/// `s` together with its directed ancestors inside G[scope].
VarSet ancestors(const Admg& g, const VarSet& scope, const VarSet& s);

/// `s` together with the directed parents of its members in the full graph.
VarSet pa_closure(const Admg& g, const VarSet& s);

/// True iff inside G[scope] some bidirected path joins `x` to one of its
/// directed children.
bool bidirected_path_to_child(const Admg& g, NodeId x, const VarSet& scope);

}  // namespace causalid

#endif  // CAUSALID_GRAPH_HPP
