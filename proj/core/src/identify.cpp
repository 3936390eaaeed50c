#include "causalid/identify.hpp"

#include <cassert>

#include "causalid/error.hpp"

namespace causalid {

IdentifyOutcome identify(const Admg& g, const VarSet& c, const VarSet& t, const QFactor& q_t) {
  if (q_t.scope != t) throw ContractError("identify: Q-factor scope differs from T");
  if (!c.is_subset_of(t)) throw ContractError("identify: C is not a subset of T");
  if (!t.empty() && c_components(g, t).size() != 1) {
    throw ContractError("identify: G[T] is not a single c-component");
  }

  std::vector<IdentifyStep> trace;
  VarSet cur_t = t;
  QFactor cur_q = q_t;
  // |T| strictly shrinks each round, so the loop runs at most |T| times.
  while (true) {
    assert(trace.size() <= t.size());
    VarSet a = ancestors(g, cur_t, c);
    trace.push_back({c, cur_t, a});

    if (a == c) {
      QFactor q = c == cur_t ? cur_q
                             : QFactor{c, with_q_scope(sum(cur_t - c, cur_q.expr), c), "identify"};
      if (c.empty()) q = QFactor{c, one(), "identify"};
      return IdentifySuccess{std::move(q), std::move(trace)};
    }
    if (a == cur_t) return IdentifyFailure{std::move(trace)};

    // C ⊂ A ⊂ T: marginalize to Q[A], then split off the block holding C.
    QFactor q_a = q_marginalize(g, cur_t, a, cur_q);
    VarSet next_t = c_component_of(g, a, c.front());
    if (!c.is_subset_of(next_t)) {
      throw ContractError("identify: C is not contained in one c-component of G[A]");
    }
    bool found = false;
    for (QFactor& part : q_decompose(g, a, q_a)) {
      if (part.scope == next_t) {
        cur_q = std::move(part);
        found = true;
        break;
      }
    }
    assert(found);
    (void)found;
    cur_t = std::move(next_t);
  }
}

}  // namespace causalid
