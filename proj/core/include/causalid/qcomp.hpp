#ifndef CAUSALID_QCOMP_HPP
#define CAUSALID_QCOMP_HPP

#include <string>
#include <vector>

#include "causalid/expr.hpp"
#include "causalid/graph.hpp"

namespace causalid {

/// Q[C]: the distribution of C when every other observed variable is set by
/// intervention. As a function it depends only on pa_closure(scope); the
/// expression may still mention other variables, since conditioning sets
/// are not minimized, but its value does not depend on them.
struct QFactor {
  VarSet scope;
  Expr expr;
  std::string provenance;
};

/// How the per-variable factors of q_observed condition on earlier variables.
enum class ContextMode {
  /// P(v_i | every variable before v_i in topological order).
  full,
  /// P(v_i | Pa(T_i) \ {v_i}), T_i being v_i's c-component among the
  /// variables up to v_i. Cosmetic: equal in value on tables that satisfy the
  /// graph's independencies, and it prints as the familiar P(z|x).
  minimal,
};

/// Q[S_j] for every c-component S_j of g, in c_components(g, g.all()) order.
std::vector<QFactor> q_observed(const Admg& g, ContextMode mode = ContextMode::full);

/// Splits Q[H] into Q[H_1] ... Q[H_l] over the c-components of G[h], each a
/// product of prefix ratios Q[H^(i)] / Q[H^(i-1)] with
/// Q[H^(i)] = Σ_{h \ h^(i)} Q[H] and Q[H^(0)] = 1. Prefixes follow the
/// topological order of G[h].
std::vector<QFactor> q_decompose(const Admg& g, const VarSet& h, const QFactor& q_h);

/// Q[W] = Σ_{c \ w} Q[C]. Throws ContractError unless w ⊆ c = q_c.scope and w
/// is ancestrally closed in G[c].
QFactor q_marginalize(const Admg& g, const VarSet& c, const VarSet& w, const QFactor& q_c);

}  // namespace causalid

#endif  // CAUSALID_QCOMP_HPP
