#ifndef CAUSALID_IDENTIFY_HPP
#define CAUSALID_IDENTIFY_HPP

#include <variant>
#include <vector>

#include "causalid/qcomp.hpp"

namespace causalid {

/// One recursion level: the target C, the current single-c-component T, and
/// A = An(C) in G[T].
struct IdentifyStep {
  VarSet c;
  VarSet t;
  VarSet a;

  friend bool operator==(const IdentifyStep&, const IdentifyStep&) = default;
};

struct IdentifySuccess {
  QFactor q;  // q.scope == C
  std::vector<IdentifyStep> trace;
};

/// The procedure could not express Q[C] from Q[T]. This is a verdict of the
/// procedure, not a proof that Q[C] is unidentifiable. The last step of the
/// trace has a == t.
struct IdentifyFailure {
  std::vector<IdentifyStep> trace;
};

using IdentifyOutcome = std::variant<IdentifySuccess, IdentifyFailure>;

inline bool succeeded(const IdentifyOutcome& o) {
  return std::holds_alternative<IdentifySuccess>(o);
}

/// Decides whether Q[c] is computable from q_t = Q[t], recursing on shrinking
/// subsets of t. Throws ContractError unless c ⊆ t = q_t.scope and G[t] is a
/// single c-component.
IdentifyOutcome identify(const Admg& g, const VarSet& c, const VarSet& t, const QFactor& q_t);

}  // namespace causalid

#endif  // CAUSALID_IDENTIFY_HPP
