#include "causalid/evaluate.hpp"

#include <string>

#include "causalid/error.hpp"

namespace causalid {
namespace {

// Strides of `sub` laid out inside the index space of `super` (zero for
// variables of `super` that `sub` lacks).
std::vector<std::size_t> aligned_strides(const DenseTable& sub, const VarSet& super) {
  std::vector<std::size_t> out(super.size(), 0);
  std::size_t stride = 1;
  const auto& ids = sub.vars().ids();
  for (std::size_t k = ids.size(); k-- > 0;) {
    for (std::size_t j = 0; j < super.size(); ++j) {
      if (super.ids()[j] == ids[k]) {
        out[j] = stride;
        break;
      }
    }
    stride *= sub.cards()[k];
  }
  return out;
}

// Visits every state of `vars`, passing each operand's flat index.
template <typename Fn>
void for_each_state(const std::vector<std::size_t>& cards,
                    const std::vector<std::vector<std::size_t>>& strides, Fn&& fn) {
  std::vector<std::size_t> digits(cards.size(), 0);
  std::vector<std::size_t> index(strides.size(), 0);
  std::size_t out = 0;
  while (true) {
    fn(out, index);
    ++out;
    std::size_t i = cards.size();
    for (; i-- > 0;) {
      if (++digits[i] < cards[i]) {
        for (std::size_t k = 0; k < strides.size(); ++k) index[k] += strides[k][i];
        break;
      }
      for (std::size_t k = 0; k < strides.size(); ++k) index[k] -= strides[k][i] * (cards[i] - 1);
      digits[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

}  // namespace

DenseTable::DenseTable(VarSet vars, std::vector<std::size_t> cards, std::vector<double> values)
    : vars_(std::move(vars)), cards_(std::move(cards)), values_(std::move(values)) {
  strides_.assign(cards_.size(), 1);
  std::size_t stride = 1;
  for (std::size_t k = cards_.size(); k-- > 0;) {
    strides_[k] = stride;
    stride *= cards_[k];
  }
  if (stride != values_.size() || cards_.size() != vars_.size()) {
    throw ContractError("dense table shape mismatch");
  }
}

double DenseTable::at_full(std::span<const std::size_t> full) const {
  std::size_t index = 0;
  for (std::size_t k = 0; k < cards_.size(); ++k) {
    const std::size_t v = full[vars_.ids()[k]];
    if (v >= cards_[k]) throw ContractError("value out of domain");
    index += v * strides_[k];
  }
  return values_[index];
}

double DenseTable::at(const Assignment& a) const {
  std::size_t index = 0;
  for (std::size_t k = 0; k < cards_.size(); ++k) {
    auto it = a.find(vars_.ids()[k]);
    if (it == a.end()) throw ContractError("assignment misses a table variable");
    if (it->second >= cards_[k]) throw ContractError("value out of domain");
    index += it->second * strides_[k];
  }
  return values_[index];
}

Evaluator::Evaluator(const JointTable& table) : table_(table) {}

const std::vector<double>& Evaluator::marginal(const VarSet& vars) {
  if (auto it = marginals_.find(vars); it != marginals_.end()) return it->second;
  std::vector<std::size_t> positions(vars.begin(), vars.end());
  for (std::size_t p : positions) {
    if (p >= table_.num_vars()) throw ContractError("expression variable missing from table");
  }
  return marginals_.emplace(vars, table_.marginal(positions)).first->second;
}

const DenseTable& Evaluator::tabulate(const Expr& e) {
  if (auto it = cache_.find(e.get()); it != cache_.end()) return it->second.second;
  DenseTable t = compute(e);
  return cache_.emplace(e.get(), std::make_pair(e, std::move(t))).first->second.second;
}

DenseTable Evaluator::compute(const Expr& e) {
  const VarSet& vars = e->free_vars();
  std::vector<std::size_t> cards;
  cards.reserve(vars.size());
  for (NodeId id : vars) {
    if (id >= table_.num_vars()) throw ContractError("expression variable missing from table");
    cards.push_back(table_.cards()[id]);
  }
  std::size_t states = 1;
  for (std::size_t c : cards) states *= c;
  std::vector<double> out(states, 0.0);

  switch (e->kind()) {
    case ExprKind::one:
      out.assign(1, 1.0);
      break;

    case ExprKind::factor: {
      // P(v | ctx) = P(v, ctx) / P(ctx); vars is v ∪ ctx in declared order.
      DenseTable joint(vars, cards, marginal(vars));
      VarSet ctx = e->context();
      std::vector<std::size_t> ctx_cards;
      for (NodeId id : ctx) ctx_cards.push_back(table_.cards()[id]);
      DenseTable denom(ctx, ctx_cards, marginal(ctx));
      const auto ds = aligned_strides(denom, vars);
      for_each_state(cards, {ds}, [&](std::size_t i, const std::vector<std::size_t>& idx) {
        const double d = denom.values()[idx[0]];
        if (d == 0.0) throw PositivityError("zero marginal in conditional probability");
        out[i] = joint.values()[i] / d;
      });
      break;
    }

    case ExprKind::product: {
      std::vector<const DenseTable*> parts;
      std::vector<std::vector<std::size_t>> strides;
      for (const auto& t : e->terms()) {
        parts.push_back(&tabulate(t));
        strides.push_back(aligned_strides(*parts.back(), vars));
      }
      for_each_state(cards, strides, [&](std::size_t i, const std::vector<std::size_t>& idx) {
        double v = 1.0;
        for (std::size_t k = 0; k < parts.size(); ++k) v *= parts[k]->values()[idx[k]];
        out[i] = v;
      });
      break;
    }

    case ExprKind::quotient: {
      const DenseTable& num = tabulate(e->numerator());
      const DenseTable& den = tabulate(e->denominator());
      std::vector<std::vector<std::size_t>> strides{aligned_strides(num, vars),
                                                     aligned_strides(den, vars)};
      for_each_state(cards, strides, [&](std::size_t i, const std::vector<std::size_t>& idx) {
        const double d = den.values()[idx[1]];
        if (d == 0.0) throw PositivityError("division by zero in quotient");
        out[i] = num.values()[idx[0]] / d;
      });
      break;
    }

    case ExprKind::sum: {
      const DenseTable& body = tabulate(e->body());
      // Bound variables absent from the body contribute their domain size.
      double multiplicity = 1.0;
      for (NodeId id : e->sum_vars()) {
        if (!body.vars().contains(id)) {
          if (id >= table_.num_vars()) throw ContractError("expression variable missing from table");
          multiplicity *= static_cast<double>(table_.cards()[id]);
        }
      }
      // Scatter each body state into the output state it projects to.
      DenseTable shape(vars, cards, std::vector<double>(states, 0.0));
      const auto os = aligned_strides(shape, body.vars());
      for_each_state(body.cards(), {os}, [&](std::size_t i, const std::vector<std::size_t>& idx) {
        out[idx[0]] += body.values()[i];
      });
      if (multiplicity != 1.0) {
        for (double& v : out) v *= multiplicity;
      }
      break;
    }
  }
  return DenseTable(vars, std::move(cards), std::move(out));
}

double Evaluator::evaluate(const Expr& e, const Assignment& a) {
  const VarSet& free = e->free_vars();
  if (a.size() != free.size()) {
    throw ContractError("assignment must bind exactly the free variables (expected " +
                        std::to_string(free.size()) + ", got " + std::to_string(a.size()) + ")");
  }
  for (NodeId id : free) {
    if (!a.contains(id)) throw ContractError("assignment misses free variable " + std::to_string(id));
  }
  return tabulate(e).at(a);
}

double evaluate(const Expr& e, const JointTable& table, const Assignment& a) {
  Evaluator ev(table);
  return ev.evaluate(e, a);
}

}  // namespace causalid
