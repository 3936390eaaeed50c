#ifndef CAUSALID_EXPR_HPP
#define CAUSALID_EXPR_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "causalid/varset.hpp"

namespace causalid {

enum class ExprKind { one, factor, product, sum, quotient };

class ExprNode;

/// Immutable expression over observed conditional probabilities. Nodes are
/// shared freely: Q-factor decomposition reuses one subexpression in many
/// prefix sums, so an Expr is a DAG whose tree expansion can be much larger.
///
/// Sum binders follow lexical scoping. An inner Sum may rebind a variable that
/// an enclosing Sum also binds; the inner binding shadows. Text and LaTeX
/// rendering prime shadowed binders so printed formulas never capture twice.
using Expr = std::shared_ptr<const ExprNode>;

class ExprNode {
 public:
  ExprKind kind() const noexcept { return kind_; }

  /// Factor P(var | context).
  NodeId var() const noexcept { return var_; }
  const VarSet& context() const noexcept { return vars_; }

  const std::vector<Expr>& terms() const noexcept { return children_; }

  /// Sum over `sum_vars()` of `body()`.
  const VarSet& sum_vars() const noexcept { return vars_; }
  const Expr& body() const { return children_.at(0); }

  const Expr& numerator() const { return children_.at(0); }
  const Expr& denominator() const { return children_.at(1); }

  /// Variables an evaluation assignment must bind.
  const VarSet& free_vars() const noexcept { return free_; }

  /// Set when this node is a Q-factor Q[C]; holds C. The expression then sums
  /// to one over C for every value of its remaining arguments.
  const std::optional<VarSet>& q_scope() const noexcept { return q_scope_; }

 private:
  friend Expr one();
  friend Expr factor(NodeId var, VarSet context);
  friend Expr product(std::vector<Expr> terms);
  friend Expr sum(VarSet vars, Expr body);
  friend Expr quotient(Expr numerator, Expr denominator);
  friend Expr with_q_scope(const Expr& e, VarSet scope);

  ExprKind kind_ = ExprKind::one;
  NodeId var_ = 0;
  VarSet vars_;
  std::vector<Expr> children_;
  VarSet free_;
  std::optional<VarSet> q_scope_;
};

Expr one();
/// Throws ContractError if `var` is in `context`.
Expr factor(NodeId var, VarSet context);
/// Drops ConstantOne terms and splices unlabeled nested products. Zero terms
/// give ConstantOne, one term gives that term.
Expr product(std::vector<Expr> terms);
/// An empty `vars` returns `body` unchanged.
Expr sum(VarSet vars, Expr body);
Expr quotient(Expr numerator, Expr denominator);
/// Copy of `e` tagged as Q[scope].
Expr with_q_scope(const Expr& e, VarSet scope);

inline const VarSet& free_vars(const Expr& e) { return e->free_vars(); }

/// Structural equality, including q_scope tags.
bool structurally_equal(const Expr& a, const Expr& b);

/// Distinct nodes reachable from `e`.
std::size_t dag_size(const Expr& e);
/// Node count of the tree expansion, saturating at `cap`.
std::size_t tree_size(const Expr& e, std::size_t cap);

/// True when no Sum rebinds a variable already bound by an enclosing Sum.
bool is_capture_free(const Expr& e);

/// Rewrites Sum nodes whose bound set covers the normalization set of a
/// Q-tagged term or a Factor's head variable, when no sibling term mentions
/// those variables: the term sums to one and is removed. Also folds x/1 to x.
/// Evaluation-equivalent on every strictly positive table.
Expr sum_to_one_eliminate(const Expr& e);

/// (Σ_vars e) / (Σ_vars 1): the average of `e` over `vars`.
Expr average_over(const Expr& e, const VarSet& vars);

/// Averages out every free variable of `e` outside `allowed`. Exact on any
/// table where the value of `e` does not depend on those variables.
Expr restrict_free_vars(const Expr& e, const VarSet& allowed);

}  // namespace causalid

#endif  // CAUSALID_EXPR_HPP
