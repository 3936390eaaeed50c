#include "causalid/condid.hpp"

#include <algorithm>

#include "causalid/error.hpp"

namespace causalid {
namespace {

void check_sets(const Admg& g, const VarSet& t, const VarSet& s, const VarSet& c) {
  if (t.empty()) throw ContractError("the intervention set must not be empty");
  if (s.empty()) throw ContractError("the outcome set must not be empty");
  if (t.intersects(s) || t.intersects(c) || s.intersects(c)) {
    throw ContractError("intervention, outcome and condition sets must be disjoint");
  }
  const VarSet all = g.all();
  if (!(t | s | c).is_subset_of(all)) throw ContractError("query names an unknown variable");
}

// Phases 1 and 2: split G[D] into blocks and run identify() on each against
// the c-component of G holding it.
std::vector<BlockReport> classify_blocks(const Admg& g, const VarSet& d, ContextMode mode) {
  const auto components = c_components(g, g.all());
  const auto q_components = q_observed(g, mode);
  std::vector<BlockReport> reports;
  for (VarSet& block : c_components(g, d)) {
    std::size_t j = 0;
    while (!components[j].contains(block.front())) ++j;
    IdentifyOutcome outcome = identify(g, block, components[j], q_components[j]);
    reports.push_back(BlockReport{std::move(block), components[j], std::move(outcome)});
  }
  return reports;
}

Expr block_product(const std::vector<BlockReport>& blocks, const std::vector<std::size_t>& which) {
  std::vector<Expr> terms;
  for (std::size_t i : which) terms.push_back(std::get<IdentifySuccess>(blocks[i].outcome).q.expr);
  return product(std::move(terms));
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

// Numerator over Σ_s numerator, simplified, with stray arguments averaged out.
Expr conditional_ratio(const Expr& numerator, const VarSet& s, const VarSet& allowed) {
  Expr ratio = quotient(numerator, sum(s, numerator));
  return restrict_free_vars(sum_to_one_eliminate(ratio), allowed);
}

}  // namespace

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::unidentified_blocks:
      return "unidentified_blocks";
    case FailureReason::outcome_overlap:
      return "outcome_overlap";
  }
  return "unknown";
}

QueryResult unconditional_effect(const Admg& g, const VarSet& t, const VarSet& s,
                                 const EffectOptions& options) {
  check_sets(g, t, s, VarSet{});
  QueryResult result{NotIdentified{}, {}};
  Diagnostics& diag = result.diagnostics;
  diag.d = ancestors(g, g.all() - t, s);
  diag.f = diag.d - s;
  diag.blocks = classify_blocks(g, diag.d, options.contexts);

  std::vector<std::size_t> failing;
  for (std::size_t i = 0; i < diag.blocks.size(); ++i) {
    if (!diag.blocks[i].identified()) failing.push_back(i);
  }
  if (!failing.empty()) {
    result.verdict = NotIdentified{FailureReason::unidentified_blocks, std::move(failing), {}};
    return result;
  }
  Expr expr = sum(diag.f, block_product(diag.blocks, all_indices(diag.blocks.size())));
  result.verdict = Identified{restrict_free_vars(sum_to_one_eliminate(expr), t | s)};
  return result;
}

QueryResult conditional_effect(const Admg& g, const Query& q, const EffectOptions& options) {
  const VarSet& t = q.treatment;
  const VarSet& s = q.outcome;
  const VarSet& c = q.condition;
  check_sets(g, t, s, c);
  if (c.empty()) return unconditional_effect(g, t, s, options);

  // Phase 1
  QueryResult result{NotIdentified{}, {}};
  Diagnostics& diag = result.diagnostics;
  diag.d = ancestors(g, g.all() - t, s | c);
  diag.f = diag.d - (s | c);

  // Phase 2
  diag.blocks = classify_blocks(g, diag.d, options.contexts);
  PartitionState state;
  state.f = diag.f;
  for (std::size_t i = 0; i < diag.blocks.size(); ++i) {
    (diag.blocks[i].identified() ? state.i_set : state.n_set).push_back(i);
  }
  const VarSet allowed = t | s | c;
  if (state.n_set.empty()) {
    Expr numerator = sum(diag.f, block_product(diag.blocks, state.i_set));
    result.verdict = Identified{conditional_ratio(numerator, s, allowed)};
    return result;
  }

  // Phase 3
  std::vector<VarSet> parents(diag.blocks.size());
  for (std::size_t i = 0; i < diag.blocks.size(); ++i) {
    parents[i] = pa_closure(g, diag.blocks[i].block);
  }
  for (std::size_t i : state.n_set) state.h |= parents[i];
  state.f0 = state.f & state.h;
  state.f1 = state.f - state.f0;
  state.i1 = state.i_set;
  while (true) {
    bool moved = false;
    std::vector<std::size_t> keep;
    for (std::size_t i : state.i1) {
      if (parents[i].intersects(state.f0)) {
        state.i0.push_back(i);
        moved = true;
      } else {
        keep.push_back(i);
      }
    }
    state.i1 = std::move(keep);
    VarSet reach;
    for (std::size_t i : state.i0) reach |= parents[i];
    const VarSet b = state.f1 & reach;
    if (!b.empty()) {
      state.f1 -= b;
      state.f0 |= b;
      moved = true;
    }
    if (moved) ++state.rounds;
    if (b.empty()) break;
  }
  std::sort(state.i0.begin(), state.i0.end());

  // Phase 4
  state.h_prime = state.h;
  for (std::size_t i : state.i0) state.h_prime |= parents[i];
  const VarSet overlap = s & state.h_prime;
  diag.partition = state;
  if (!overlap.empty()) {
    result.verdict = NotIdentified{FailureReason::outcome_overlap, state.n_set, overlap};
    return result;
  }
  Expr numerator = sum(state.f1, block_product(diag.blocks, state.i1));
  result.verdict = Identified{conditional_ratio(numerator, s, allowed)};
  return result;
}

bool theorem1_check(const Admg& g, NodeId x, const VarSet& s, const VarSet& c) {
  if (s.contains(x) || c.contains(x)) throw ContractError("theorem1_check: x must lie outside S and C");
  if (s.intersects(c)) throw ContractError("theorem1_check: S and C must be disjoint");
  const VarSet scope = ancestors(g, g.all(), s | c);
  return !bidirected_path_to_child(g, x, scope);
}

}  // namespace causalid
