#ifndef CAUSALID_TESTS_SUPPORT_HPP
#define CAUSALID_TESTS_SUPPORT_HPP

#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "causalid/condid.hpp"
#include "causalid/evaluate.hpp"
#include "causalid/graph.hpp"
#include "causalid/joint_table.hpp"
#include "causalid/oracle.hpp"

namespace causalid::testing {

Admg load_fixture(std::string_view name);

/// "A,B" -> {A,B}; "" -> {}.
VarSet vars(const Admg& g, std::string_view list);

/// Random strictly positive joint table with the graph's variable names.
JointTable random_table(const std::vector<std::string>& names, std::span<const std::size_t> cards,
                        std::mt19937_64& rng);

// Slow reference computations written independently of the library's
// enumeration code. They read CPT rows directly.

/// Σ over full rows of `table` consistent with `partial`.
double brute_prob(const JointTable& table, const Assignment& partial);

/// Σ_u P(u) Π_{i ∈ c} P(v_i | pa_i, u^i) at one full observed assignment.
double brute_q(const ScmModel& m, const VarSet& c, std::span<const std::size_t> full);

/// P_t(s | c) by summing the truncated mixture over all consistent rows.
double brute_conditional(const ScmModel& m, const Assignment& t, const Assignment& s,
                         const Assignment& c);

/// Disjoint T, S, C with T and S nonempty. C is empty with some probability.
Query random_query(const Admg& g, std::mt19937_64& rng);

/// Same graph with declared order permuted: new node i is old node perm[i].
Admg permute_nodes(const Admg& g, std::span<const NodeId> perm);

/// Maps a set of old ids to new ids under permute_nodes(g, perm).
VarSet permute_set(const VarSet& s, std::span<const NodeId> perm);

/// All assignments of `vars` under `cards` (indexed by NodeId).
std::vector<Assignment> all_assignments(const VarSet& vars, std::span<const std::size_t> cards);

/// Full observed assignment merging several partial assignments.
std::vector<std::size_t> merge_full(std::size_t n, std::initializer_list<const Assignment*> parts);

}  // namespace causalid::testing

#endif  // CAUSALID_TESTS_SUPPORT_HPP
