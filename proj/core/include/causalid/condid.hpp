#ifndef CAUSALID_CONDID_HPP
#define CAUSALID_CONDID_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "causalid/identify.hpp"

namespace causalid {

/// P_t(s | c): intervene on `treatment`, read `outcome`, condition on
/// `condition` (possibly empty).
struct Query {
  VarSet treatment;
  VarSet outcome;
  VarSet condition;
};

/// One c-component D_i of G[D] and how identify() classified it.
struct BlockReport {
  VarSet block;
  VarSet component;  // the c-component S_j of the full graph holding the block
  IdentifyOutcome outcome;

  bool identified() const { return succeeded(outcome); }
};

/// The F / I split that separates unidentifiable terms from identifiable
/// ones. Block sets hold indices into Diagnostics::blocks.
struct PartitionState {
  std::vector<std::size_t> n_set;
  std::vector<std::size_t> i_set;
  VarSet f;
  VarSet f0;
  VarSet f1;
  std::vector<std::size_t> i0;
  std::vector<std::size_t> i1;
  VarSet h;        // union of Pa(D_i) over N
  VarSet h_prime;  // h plus Pa(D_i) over I0
  /// Passes of the fixpoint loop that moved at least one element.
  std::size_t rounds = 0;
};

struct Diagnostics {
  VarSet d;
  VarSet f;
  std::vector<BlockReport> blocks;
  std::optional<PartitionState> partition;
};

enum class FailureReason {
  /// Unconditional effect: some Q[D_i] was not identified.
  unidentified_blocks,
  /// Conditional effect: an outcome variable feeds an unidentifiable term.
  outcome_overlap,
};

std::string_view to_string(FailureReason reason);

struct Identified {
  Expr expr;
};

struct NotIdentified {
  FailureReason reason;
  std::vector<std::size_t> failing_blocks;  // indices into Diagnostics::blocks
  VarSet witnesses;                         // S ∩ H' for outcome_overlap
};

struct QueryResult {
  std::variant<Identified, NotIdentified> verdict;
  Diagnostics diagnostics;

  bool identifiable() const { return std::holds_alternative<Identified>(verdict); }
  const Expr& expression() const { return std::get<Identified>(verdict).expr; }
  const NotIdentified& failure() const { return std::get<NotIdentified>(verdict); }
};

struct EffectOptions {
  ContextMode contexts = ContextMode::full;
};

/// P_t(s) = Σ_{d \ s} Π_i Q[D_i] with D = An(s) in G[V \ T]. Throws
/// ContractError when t or s is empty or they overlap.
QueryResult unconditional_effect(const Admg& g, const VarSet& t, const VarSet& s,
                                 const EffectOptions& options = {});

/// P_t(s | c). An empty condition delegates to unconditional_effect.
/// Throws ContractError when t or s is empty or any two sets overlap.
QueryResult conditional_effect(const Admg& g, const Query& q, const EffectOptions& options = {});

/// Sufficient graphical test for P_x(s | c): no bidirected path from x to any
/// of its children inside G[An(s ∪ c)].
bool theorem1_check(const Admg& g, NodeId x, const VarSet& s, const VarSet& c);

}  // namespace causalid

#endif  // CAUSALID_CONDID_HPP
