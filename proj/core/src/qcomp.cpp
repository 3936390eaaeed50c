#include "causalid/qcomp.hpp"

#include "causalid/error.hpp"

namespace causalid {
namespace {

QFactor make_q(VarSet scope, Expr expr, std::string provenance) {
  if (scope.empty()) return QFactor{std::move(scope), one(), std::move(provenance)};
  Expr tagged = with_q_scope(expr, scope);
  return QFactor{std::move(scope), std::move(tagged), std::move(provenance)};
}

}  // namespace

std::vector<QFactor> q_observed(const Admg& g, ContextMode mode) {
  const TopoOrder order = topological_order(g, g.all());
  std::vector<Expr> conditional(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const NodeId v = order[i];
    const VarSet before = order.prefix(i);
    VarSet context;
    if (mode == ContextMode::full) {
      context = before;
    } else {
      VarSet upto = before;
      upto.insert(v);
      context = pa_closure(g, c_component_of(g, upto, v));
      context.erase(v);
    }
    conditional[v] = factor(v, std::move(context));
  }

  std::vector<QFactor> out;
  for (VarSet& block : c_components(g, g.all())) {
    std::vector<Expr> terms;
    // Terms in topological order, matching how the factorization is written.
    for (NodeId v : order.nodes()) {
      if (block.contains(v)) terms.push_back(conditional[v]);
    }
    out.push_back(make_q(std::move(block), product(std::move(terms)), "lemma1"));
  }
  return out;
}

std::vector<QFactor> q_decompose(const Admg& g, const VarSet& h, const QFactor& q_h) {
  if (q_h.scope != h) throw ContractError("q_decompose: Q-factor scope differs from H");
  const TopoOrder order = topological_order(g, h);

  // prefix_q[i] = Q[H^(i)], shared by every block that needs it.
  std::vector<Expr> prefix_q(order.size() + 1);
  prefix_q[0] = one();
  for (std::size_t i = 1; i <= order.size(); ++i) {
    VarSet prefix = order.prefix(i);
    Expr marginal = sum(h - prefix, q_h.expr);
    prefix_q[i] = i == order.size() ? q_h.expr : with_q_scope(marginal, std::move(prefix));
  }

  std::vector<QFactor> out;
  for (VarSet& block : c_components(g, h)) {
    std::vector<Expr> ratios;
    for (std::size_t i = 1; i <= order.size(); ++i) {
      if (!block.contains(order[i - 1])) continue;
      const Expr& den = prefix_q[i - 1];
      ratios.push_back(den->kind() == ExprKind::one ? prefix_q[i] : quotient(prefix_q[i], den));
    }
    Expr expr = ratios.size() == 1 ? ratios.front() : product(std::move(ratios));
    out.push_back(make_q(std::move(block), std::move(expr), "lemma2"));
  }
  return out;
}

QFactor q_marginalize(const Admg& g, const VarSet& c, const VarSet& w, const QFactor& q_c) {
  if (q_c.scope != c) throw ContractError("q_marginalize: Q-factor scope differs from C");
  if (!w.is_subset_of(c)) throw ContractError("q_marginalize: W is not a subset of C");
  if (ancestors(g, c, w) != w) {
    throw ContractError("q_marginalize: W is not ancestrally closed in G[C]");
  }
  if (w == c) return q_c;
  return make_q(w, sum(c - w, q_c.expr), "lemma3");
}

}  // namespace causalid
