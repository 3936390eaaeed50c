#ifndef CAUSALID_EVALUATE_HPP
#define CAUSALID_EVALUATE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "causalid/expr.hpp"
#include "causalid/joint_table.hpp"

namespace causalid {

/// Values of some variables, keyed by NodeId.
using Assignment = std::map<NodeId, std::size_t>;

/// A function of finitely many variables stored as a dense row-major table
/// (the first variable varies slowest).
class DenseTable {
 public:
  DenseTable(VarSet vars, std::vector<std::size_t> cards, std::vector<double> values);

  const VarSet& vars() const noexcept { return vars_; }
  const std::vector<std::size_t>& cards() const noexcept { return cards_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Lookup with `full[id]` holding the value of variable `id`; entries for
  /// variables outside vars() are ignored.
  double at_full(std::span<const std::size_t> full) const;
  double at(const Assignment& a) const;

 private:
  VarSet vars_;
  std::vector<std::size_t> cards_;
  std::vector<std::size_t> strides_;
  std::vector<double> values_;
};

/// Exact evaluation of expressions against one joint table. Variable `id` of
/// an expression reads column `id` of the table.
///
/// Each expression node is tabulated once over its free variables and cached,
/// so shared subexpressions cost nothing extra. Not thread-safe; use one
/// Evaluator per thread.
class Evaluator {
 public:
  explicit Evaluator(const JointTable& table);

  const DenseTable& tabulate(const Expr& e);

  /// Throws ContractError unless `a` binds exactly free_vars(e).
  double evaluate(const Expr& e, const Assignment& a);

 private:
  const std::vector<double>& marginal(const VarSet& vars);
  DenseTable compute(const Expr& e);

  const JointTable& table_;
  std::map<VarSet, std::vector<double>> marginals_;
  // Keyed by node address; holding the Expr keeps the address alive.
  std::unordered_map<const ExprNode*, std::pair<Expr, DenseTable>> cache_;
};

/// One-shot convenience wrapper around Evaluator.
double evaluate(const Expr& e, const JointTable& table, const Assignment& a);

}  // namespace causalid

#endif  // CAUSALID_EVALUATE_HPP
