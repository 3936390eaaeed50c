#include "causalid/graph.hpp"

#include <algorithm>
#include <queue>

#include "causalid/error.hpp"

namespace causalid {
namespace {

std::vector<bool> mask_of(std::size_t n, const VarSet& set) {
  std::vector<bool> mask(n, false);
  for (NodeId id : set) mask.at(id) = true;
  return mask;
}

}  // namespace

Admg::Admg(std::vector<std::string> names, std::vector<Edge> directed,
           std::vector<Edge> bidirected)
    : names_(std::move(names)) {
  const auto n = static_cast<NodeId>(names_.size());
  for (NodeId i = 0; i < n; ++i) {
    if (names_[i].empty()) throw GraphError("empty node name");
    if (!index_.emplace(names_[i], i).second) {
      throw GraphError("duplicate node '" + names_[i] + "'");
    }
  }
  auto check = [&](const Edge& e, const char* kind) {
    if (e.from >= n || e.to >= n) {
      throw GraphError(std::string(kind) + " edge endpoint out of range");
    }
    if (e.from == e.to) {
      throw GraphError(std::string(kind) + " self-loop on '" + names_[e.from] + "'");
    }
  };
  for (const Edge& e : directed) check(e, "directed");
  for (Edge& e : bidirected) {
    check(e, "bidirected");
    if (e.from > e.to) std::swap(e.from, e.to);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());
  std::sort(bidirected.begin(), bidirected.end());
  bidirected.erase(std::unique(bidirected.begin(), bidirected.end()), bidirected.end());
  directed_ = std::move(directed);
  bidirected_ = std::move(bidirected);

  parents_.assign(n, {});
  children_.assign(n, {});
  siblings_.assign(n, {});
  for (const Edge& e : directed_) {
    parents_[e.to].push_back(e.from);
    children_[e.from].push_back(e.to);
  }
  for (const Edge& e : bidirected_) {
    siblings_[e.from].push_back(e.to);
    siblings_[e.to].push_back(e.from);
  }
  for (NodeId i = 0; i < n; ++i) {
    std::sort(parents_[i].begin(), parents_[i].end());
    std::sort(children_[i].begin(), children_[i].end());
    std::sort(siblings_[i].begin(), siblings_[i].end());
  }

  if (topological_order(*this, all()).size() != n) {
    throw GraphError("directed edges contain a cycle");
  }
}

std::optional<NodeId> Admg::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Admg::id(std::string_view name) const {
  if (auto found = find(name)) return *found;
  throw GraphError("unknown variable '" + std::string(name) + "'");
}

VarSet Admg::all() const {
  std::vector<NodeId> ids(size());
  for (NodeId i = 0; i < ids.size(); ++i) ids[i] = i;
  return VarSet(std::move(ids));
}

VarSet Admg::varset(std::span<const std::string> names) const {
  std::vector<NodeId> ids;
  ids.reserve(names.size());
  for (const auto& name : names) ids.push_back(id(name));
  return VarSet(std::move(ids));
}

std::string Admg::format(const VarSet& set) const {
  std::string out = "{";
  bool first = true;
  for (NodeId id : set) {
    if (!first) out += ',';
    out += name(id);
    first = false;
  }
  out += '}';
  return out;
}

VarSet TopoOrder::prefix(std::size_t i) const {
  return VarSet(std::vector<NodeId>(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(i)));
}

std::size_t TopoOrder::position(NodeId id) const {
  auto it = std::find(order_.begin(), order_.end(), id);
  return static_cast<std::size_t>(it - order_.begin());
}

TopoOrder topological_order(const Admg& g, const VarSet& scope) {
  const auto in_scope = mask_of(g.size(), scope);
  std::vector<std::size_t> pending(g.size(), 0);
  for (NodeId v : scope) {
    for (NodeId p : g.parents(v)) {
      if (in_scope[p]) ++pending[v];
    }
  }
  // Min-heap on NodeId gives the declared-order tie-break.
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId v : scope) {
    if (pending[v] == 0) ready.push(v);
  }
  std::vector<NodeId> order;
  order.reserve(scope.size());
  while (!ready.empty()) {
    NodeId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (NodeId c : g.children(v)) {
      if (in_scope[c] && --pending[c] == 0) ready.push(c);
    }
  }
  return TopoOrder(std::move(order));
}

std::vector<VarSet> c_components(const Admg& g, const VarSet& scope) {
  const auto in_scope = mask_of(g.size(), scope);
  std::vector<bool> seen(g.size(), false);
  std::vector<VarSet> blocks;
  // Scope iterates in declared order, so each block is discovered from its
  // minimum member and blocks come out ordered by that member.
  for (NodeId root : scope) {
    if (seen[root]) continue;
    std::vector<NodeId> members;
    std::vector<NodeId> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (NodeId s : g.siblings(v)) {
        if (in_scope[s] && !seen[s]) {
          seen[s] = true;
          stack.push_back(s);
        }
      }
    }
    blocks.emplace_back(std::move(members));
  }
  return blocks;
}

VarSet c_component_of(const Admg& g, const VarSet& scope, NodeId x) {
  for (auto& block : c_components(g, scope)) {
    if (block.contains(x)) return block;
  }
  return {};
}

VarSet ancestors(const Admg& g, const VarSet& scope, const VarSet& s) {
  const auto in_scope = mask_of(g.size(), scope);
  std::vector<bool> seen(g.size(), false);
  std::vector<NodeId> stack;
  std::vector<NodeId> found;
  for (NodeId v : s) {
    if (in_scope[v] && !seen[v]) {
      seen[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    found.push_back(v);
    for (NodeId p : g.parents(v)) {
      if (in_scope[p] && !seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return VarSet(std::move(found));
}

VarSet pa_closure(const Admg& g, const VarSet& s) {
  std::vector<NodeId> out(s.begin(), s.end());
  for (NodeId v : s) {
    auto ps = g.parents(v);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return VarSet(std::move(out));
}

bool bidirected_path_to_child(const Admg& g, NodeId x, const VarSet& scope) {
  if (!scope.contains(x)) return false;
  const VarSet block = c_component_of(g, scope, x);
  for (NodeId c : g.children(x)) {
    if (scope.contains(c) && block.contains(c)) return true;
  }
  return false;
}

}  // namespace causalid
