#ifndef CAUSALID_ORACLE_HPP
#define CAUSALID_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "causalid/condid.hpp"
#include "causalid/evaluate.hpp"
#include "causalid/graph.hpp"
#include "causalid/joint_table.hpp"

namespace causalid {

/// Default cap on observed × latent joint states enumerated by the oracle.
inline constexpr std::size_t kDefaultStateCap = std::size_t{1} << 22;

/// kDefaultStateCap, or CAUSALID_MAX_STATES from the environment when set.
std::size_t default_state_cap();

/// Discrete semi-Markovian model with one explicit latent per bidirected
/// edge of its graph; that latent is a parent of exactly the edge's two ends.
///
/// CPT layout for observed variable v: one row per configuration of
/// (observed parents ascending, then adjacent latents ascending), first
/// listed varying slowest; each row holds card(v) probabilities.
class ScmModel {
 public:
  ScmModel(Admg graph, std::vector<std::size_t> observed_cards,
           std::vector<std::size_t> latent_cards, std::vector<std::vector<double>> latent_priors,
           std::vector<std::vector<double>> cpts);

  const Admg& graph() const noexcept { return graph_; }
  std::size_t num_latents() const noexcept { return latent_cards_.size(); }
  const std::vector<std::size_t>& observed_cards() const noexcept { return observed_cards_; }
  const std::vector<std::size_t>& latent_cards() const noexcept { return latent_cards_; }
  /// Latent index of each bidirected edge, in graph().bidirected_edges() order.
  const std::vector<std::size_t>& latents_of(NodeId v) const { return latent_parents_.at(v); }
  const std::vector<double>& latent_prior(std::size_t u) const { return latent_priors_.at(u); }
  const std::vector<double>& cpt(NodeId v) const { return cpts_.at(v); }

  /// P(v = value | observed parents, latents) read from full assignments.
  double conditional(NodeId v, std::span<const std::size_t> observed,
                     std::span<const std::size_t> latent) const;

  /// Smallest CPT or prior entry.
  double min_entry() const;

 private:
  Admg graph_;
  std::vector<std::size_t> observed_cards_;
  std::vector<std::size_t> latent_cards_;
  std::vector<std::vector<double>> latent_priors_;
  std::vector<std::vector<double>> cpts_;
  std::vector<std::vector<std::size_t>> latent_parents_;
};

struct ModelConfig {
  std::size_t observed_card = 2;
  std::map<NodeId, std::size_t> card_overrides;
  std::size_t latent_card = 2;
  double epsilon = 1e-3;
  std::size_t max_states = kDefaultStateCap;
};

/// Deterministic in (g, config, seed). Every row is drawn from a flat
/// Dirichlet and mixed with the uniform row so each entry is ≥ epsilon.
ScmModel random_model(const Admg& g, const ModelConfig& config, std::uint64_t seed);

/// P(v) = Σ_u Π_i P(v_i | pa_i, u^i) P(u). Variables in declared order.
JointTable observed_joint(const ScmModel& m, std::size_t max_states = default_state_cap());

/// Distribution of V \ T under do(T = t). Probabilities of assignments that
/// disagree with t are zero and are not stored.
struct PostInterventionTable {
  VarSet treatment;
  Assignment treatment_values;
  std::vector<NodeId> vars;  // V \ T ascending; column k of `table` is vars[k]
  JointTable table;

  /// Probability of a full assignment of V, zero when it disagrees with t.
  double probability(std::span<const std::size_t> full) const;
};

PostInterventionTable post_intervention(const ScmModel& m, const Assignment& t,
                                        std::size_t max_states = default_state_cap());

/// Q[C](v) = Σ_u Π_{i ∈ C} P(v_i | pa_i, u^i) P(u) for every full observed
/// assignment, indexed like observed_joint(m).probs().
std::vector<double> q_oracle(const ScmModel& m, const VarSet& c,
                             std::size_t max_states = default_state_cap());

/// P_t(s | c) = P_t(s, c) / P_t(c). An empty `c` gives P_t(s).
double oracle_conditional(const ScmModel& m, const Assignment& t, const Assignment& s,
                          const Assignment& c, std::size_t max_states = default_state_cap());

struct VerifyConfig {
  std::size_t n_models = 100;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  ModelConfig model;
};

struct VerifyReport {
  std::size_t n_models = 0;
  std::size_t n_assignments = 0;
  double max_abs_deviation = 0.0;
  std::vector<double> per_model_worst;
  double tolerance = 0.0;
  bool pass = true;
};

/// Compares `expr`, evaluated on each random model's observed joint, with
/// the model's true P_t(s | c) for every assignment of T ∪ S ∪ C.
VerifyReport verify_expression(const Admg& g, const Expr& expr, const Query& q,
                               const VerifyConfig& config);

/// Runs conditional_effect and verifies its expression. Throws ContractError
/// when the query is not identified.
VerifyReport verify_query(const Admg& g, const Query& q, const VerifyConfig& config,
                          const EffectOptions& options = {});

/// JSON object with the report's fields and a schema_version.
std::string to_json(const VerifyReport& report);

}  // namespace causalid

#endif  // CAUSALID_ORACLE_HPP
