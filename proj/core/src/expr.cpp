#include "causalid/expr.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "causalid/error.hpp"

namespace causalid {

Expr one() {
  static const Expr instance = std::make_shared<const ExprNode>();
  return instance;
}

Expr factor(NodeId var, VarSet context) {
  if (context.contains(var)) throw ContractError("factor variable appears in its own context");
  auto node = std::make_shared<ExprNode>();
  node->kind_ = ExprKind::factor;
  node->var_ = var;
  node->free_ = context;
  node->free_.insert(var);
  node->vars_ = std::move(context);
  return node;
}

Expr product(std::vector<Expr> terms) {
  std::vector<Expr> flat;
  flat.reserve(terms.size());
  for (auto& t : terms) {
    if (!t) throw ContractError("null expression in product");
    if (t->kind() == ExprKind::one && !t->q_scope()) continue;
    if (t->kind() == ExprKind::product && !t->q_scope()) {
      flat.insert(flat.end(), t->terms().begin(), t->terms().end());
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (flat.empty()) return one();
  if (flat.size() == 1) return flat.front();
  auto node = std::make_shared<ExprNode>();
  node->kind_ = ExprKind::product;
  std::vector<NodeId> free;
  for (const auto& t : flat) free.insert(free.end(), t->free_vars().begin(), t->free_vars().end());
  node->free_ = VarSet(std::move(free));
  node->children_ = std::move(flat);
  return node;
}

Expr sum(VarSet vars, Expr body) {
  if (!body) throw ContractError("null expression in sum");
  if (vars.empty()) return body;
  auto node = std::make_shared<ExprNode>();
  node->kind_ = ExprKind::sum;
  node->free_ = body->free_vars() - vars;
  node->vars_ = std::move(vars);
  node->children_ = {std::move(body)};
  return node;
}

Expr quotient(Expr numerator, Expr denominator) {
  if (!numerator || !denominator) throw ContractError("null expression in quotient");
  auto node = std::make_shared<ExprNode>();
  node->kind_ = ExprKind::quotient;
  node->free_ = numerator->free_vars() | denominator->free_vars();
  node->children_ = {std::move(numerator), std::move(denominator)};
  return node;
}

Expr with_q_scope(const Expr& e, VarSet scope) {
  auto node = std::make_shared<ExprNode>(*e);
  node->q_scope_ = std::move(scope);
  return node;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind() || a->q_scope() != b->q_scope()) return false;
  switch (a->kind()) {
    case ExprKind::one:
      return true;
    case ExprKind::factor:
      return a->var() == b->var() && a->context() == b->context();
    case ExprKind::sum:
      return a->sum_vars() == b->sum_vars() && structurally_equal(a->body(), b->body());
    case ExprKind::product:
    case ExprKind::quotient:
      if (a->terms().size() != b->terms().size()) return false;
      for (std::size_t i = 0; i < a->terms().size(); ++i) {
        if (!structurally_equal(a->terms()[i], b->terms()[i])) return false;
      }
      return true;
  }
  return false;
}

std::size_t dag_size(const Expr& e) {
  std::unordered_set<const ExprNode*> seen;
  std::vector<const ExprNode*> stack{e.get()};
  while (!stack.empty()) {
    const ExprNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& c : n->terms()) stack.push_back(c.get());
  }
  return seen.size();
}

std::size_t tree_size(const Expr& e, std::size_t cap) {
  std::unordered_map<const ExprNode*, std::size_t> memo;
  auto visit = [&](auto&& self, const ExprNode* n) -> std::size_t {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    std::size_t total = 1;
    for (const auto& c : n->terms()) {
      total += self(self, c.get());
      if (total >= cap) {
        total = cap;
        break;
      }
    }
    memo.emplace(n, total);
    return total;
  };
  return visit(visit, e.get());
}

bool is_capture_free(const Expr& e) {
  std::unordered_map<const ExprNode*, VarSet> bound_inside;
  auto binders = [&](auto&& self, const ExprNode* n) -> const VarSet& {
    if (auto it = bound_inside.find(n); it != bound_inside.end()) return it->second;
    VarSet out;
    if (n->kind() == ExprKind::sum) out = n->sum_vars();
    for (const auto& c : n->terms()) out |= self(self, c.get());
    return bound_inside.emplace(n, std::move(out)).first->second;
  };
  std::map<std::pair<const ExprNode*, VarSet>, bool> memo;
  auto check = [&](auto&& self, const ExprNode* n, const VarSet& enclosing) -> bool {
    VarSet relevant = enclosing & binders(binders, n);
    auto key = std::make_pair(n, relevant);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = true;
    VarSet inner = relevant;
    if (n->kind() == ExprKind::sum) {
      ok = !n->sum_vars().intersects(relevant);
      inner |= n->sum_vars();
    }
    for (const auto& c : n->terms()) {
      if (!ok) break;
      ok = self(self, c.get(), inner);
    }
    memo.emplace(std::move(key), ok);
    return ok;
  };
  return check(check, e.get(), VarSet{});
}

namespace {

// The set a term sums to one over, or empty when it is not recognized.
VarSet normalization_set(const Expr& t) {
  if (t->q_scope()) return *t->q_scope();
  if (t->kind() == ExprKind::factor) return VarSet{t->var()};
  return {};
}

Expr keep_tag(const Expr& original, Expr rewritten) {
  if (original->q_scope() && rewritten != original && rewritten->kind() != ExprKind::one) {
    return with_q_scope(rewritten, *original->q_scope());
  }
  return rewritten;
}

class SumToOne {
 public:
  Expr rewrite(const Expr& e) {
    if (auto it = memo_.find(e.get()); it != memo_.end()) return it->second;
    Expr out = rewrite_uncached(e);
    memo_.emplace(e.get(), out);
    return out;
  }

 private:
  Expr rewrite_uncached(const Expr& e) {
    switch (e->kind()) {
      case ExprKind::one:
      case ExprKind::factor:
        return e;
      case ExprKind::product: {
        std::vector<Expr> terms;
        bool changed = false;
        for (const auto& t : e->terms()) {
          terms.push_back(rewrite(t));
          changed |= terms.back() != t;
        }
        return changed ? keep_tag(e, product(std::move(terms))) : e;
      }
      case ExprKind::quotient: {
        Expr num = rewrite(e->numerator());
        Expr den = rewrite(e->denominator());
        if (den->kind() == ExprKind::one) return keep_tag(e, num);
        if (num == e->numerator() && den == e->denominator()) return e;
        return keep_tag(e, quotient(std::move(num), std::move(den)));
      }
      case ExprKind::sum:
        return keep_tag(e, rewrite_sum(e));
    }
    return e;
  }

  Expr rewrite_sum(const Expr& e) {
    VarSet bound = e->sum_vars();
    const Expr rewritten_body = rewrite(e->body());
    Expr body = rewritten_body;
    // Merge directly nested untagged sums over disjoint variables.
    while (body->kind() == ExprKind::sum && !body->q_scope() &&
           !body->sum_vars().intersects(bound)) {
      bound |= body->sum_vars();
      body = body->body();
    }
    std::vector<Expr> terms;
    if (body->kind() == ExprKind::product && !body->q_scope()) {
      terms = body->terms();
    } else {
      terms = {body};
    }

    bool removed_any = false;
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        VarSet norm = normalization_set(terms[i]);
        if (norm.empty() || !norm.is_subset_of(bound)) continue;
        bool isolated = true;
        for (std::size_t j = 0; j < terms.size() && isolated; ++j) {
          if (j != i && terms[j]->free_vars().intersects(norm)) isolated = false;
        }
        if (!isolated) continue;
        terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(i));
        bound -= norm;
        progress = removed_any = true;
        break;
      }
    }
    if (!removed_any) {
      return rewritten_body == e->body() ? e : sum(e->sum_vars(), rewritten_body);
    }
    return sum(std::move(bound), product(std::move(terms)));
  }

  std::unordered_map<const ExprNode*, Expr> memo_;
};

}  // namespace

Expr sum_to_one_eliminate(const Expr& e) {
  SumToOne pass;
  return pass.rewrite(e);
}

Expr average_over(const Expr& e, const VarSet& vars) {
  if (vars.empty()) return e;
  return quotient(sum(vars, e), sum(vars, one()));
}

Expr restrict_free_vars(const Expr& e, const VarSet& allowed) {
  Expr out = average_over(e, e->free_vars() - allowed);
  if (e->q_scope() && out != e) out = with_q_scope(out, *e->q_scope());
  return out;
}

}  // namespace causalid
