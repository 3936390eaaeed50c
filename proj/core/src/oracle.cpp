#include "causalid/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

#include <json.hpp>

#include "causalid/error.hpp"

namespace causalid {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::vector<double> random_row(std::size_t k, double epsilon, std::mt19937_64& rng) {
  if (static_cast<double>(k) * epsilon >= 1.0) {
    throw ContractError("positivity floor too large for cardinality " + std::to_string(k));
  }
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> row(k);
  double total = 0.0;
  for (double& x : row) {
    x = exp1(rng);
    total += x;
  }
  const double scale = 1.0 - static_cast<double>(k) * epsilon;
  for (double& x : row) x = epsilon + scale * (x / total);
  return row;
}

void check_assignment(const ScmModel& m, const Assignment& a, const char* what) {
  for (const auto& [id, value] : a) {
    if (id >= m.graph().size()) throw ContractError(std::string(what) + " names an unknown variable");
    if (value >= m.observed_cards()[id]) {
      throw ContractError(std::string(what) + " value out of domain for " + m.graph().name(id));
    }
  }
}

// For each state of the observed variables outside `fixed` (ascending ids,
// row-major), Σ_u P(u) Π_{i : include[i]} P(v_i | pa_i, u^i).
std::vector<double> latent_mixture(const ScmModel& m, const std::vector<bool>& include,
                                   const Assignment& fixed, std::size_t cap) {
  const std::size_t n = m.graph().size();
  std::vector<NodeId> free_vars;
  std::vector<std::size_t> free_cards;
  for (NodeId v = 0; v < n; ++v) {
    if (!fixed.contains(v)) {
      free_vars.push_back(v);
      free_cards.push_back(m.observed_cards()[v]);
    }
  }
  std::vector<std::size_t> all_cards = free_cards;
  all_cards.insert(all_cards.end(), m.latent_cards().begin(), m.latent_cards().end());
  checked_state_count(all_cards, cap);

  const std::size_t n_latent_states = checked_state_count(m.latent_cards(), cap);
  std::vector<std::vector<std::size_t>> latent_states;
  std::vector<double> latent_weight;
  latent_states.reserve(n_latent_states);
  {
    std::vector<std::size_t> u(m.num_latents(), 0);
    do {
      double w = 1.0;
      for (std::size_t k = 0; k < u.size(); ++k) w *= m.latent_prior(k)[u[k]];
      latent_states.push_back(u);
      latent_weight.push_back(w);
    } while (next_assignment(u, m.latent_cards()));
  }

  std::vector<std::size_t> obs(n, 0);
  for (const auto& [id, value] : fixed) obs[id] = value;
  std::vector<std::size_t> digits(free_vars.size(), 0);
  std::vector<double> out;
  out.reserve(checked_state_count(free_cards, cap));
  do {
    for (std::size_t k = 0; k < free_vars.size(); ++k) obs[free_vars[k]] = digits[k];
    double total = 0.0;
    for (std::size_t s = 0; s < latent_states.size(); ++s) {
      double p = latent_weight[s];
      for (NodeId v = 0; v < n; ++v) {
        if (include[v]) p *= m.conditional(v, obs, latent_states[s]);
      }
      total += p;
    }
    out.push_back(total);
  } while (next_assignment(digits, free_cards));
  return out;
}

std::vector<std::size_t> positions_of(const std::vector<NodeId>& vars, const Assignment& a) {
  std::vector<std::size_t> out;
  for (const auto& [id, value] : a) {
    auto it = std::find(vars.begin(), vars.end(), id);
    if (it == vars.end()) throw ContractError("variable is not in the post-intervention table");
    out.push_back(static_cast<std::size_t>(it - vars.begin()));
  }
  return out;
}

// Row-major index of `a`'s values within a marginal over `positions`.
std::size_t marginal_index(const JointTable& table, const std::vector<std::size_t>& positions,
                           const std::vector<std::size_t>& values) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    index = index * table.cards()[positions[k]] + values[k];
  }
  return index;
}

}  // namespace

std::size_t default_state_cap() {
  if (const char* env = std::getenv("CAUSALID_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultStateCap;
}

ScmModel::ScmModel(Admg graph, std::vector<std::size_t> observed_cards,
                   std::vector<std::size_t> latent_cards,
                   std::vector<std::vector<double>> latent_priors,
                   std::vector<std::vector<double>> cpts)
    : graph_(std::move(graph)),
      observed_cards_(std::move(observed_cards)),
      latent_cards_(std::move(latent_cards)),
      latent_priors_(std::move(latent_priors)),
      cpts_(std::move(cpts)) {
  const std::size_t n = graph_.size();
  const std::size_t n_latent = graph_.bidirected_edges().size();
  if (observed_cards_.size() != n || cpts_.size() != n) {
    throw ContractError("one cardinality and one CPT per observed variable required");
  }
  if (latent_cards_.size() != n_latent || latent_priors_.size() != n_latent) {
    throw ContractError("one latent per bidirected edge required");
  }
  latent_parents_.assign(n, {});
  for (std::size_t k = 0; k < n_latent; ++k) {
    const Edge& e = graph_.bidirected_edges()[k];
    latent_parents_[e.from].push_back(k);
    latent_parents_[e.to].push_back(k);
  }
  auto check_rows = [](const std::vector<double>& table, std::size_t width, const std::string& what) {
    if (width < 1 || table.size() % width != 0) throw ContractError(what + " has a ragged layout");
    for (std::size_t r = 0; r < table.size(); r += width) {
      double total = 0.0;
      for (std::size_t k = 0; k < width; ++k) {
        if (!(table[r + k] > 0.0)) throw PositivityError(what + " has a non-positive entry");
        total += table[r + k];
      }
      if (std::abs(total - 1.0) > 1e-12) throw ContractError(what + " has a row not summing to one");
    }
  };
  for (std::size_t k = 0; k < n_latent; ++k) {
    if (latent_priors_[k].size() != latent_cards_[k]) throw ContractError("latent prior size mismatch");
    check_rows(latent_priors_[k], latent_cards_[k], "latent prior");
  }
  for (NodeId v = 0; v < n; ++v) {
    std::size_t rows = 1;
    for (NodeId p : graph_.parents(v)) rows *= observed_cards_[p];
    for (std::size_t u : latent_parents_[v]) rows *= latent_cards_[u];
    if (cpts_[v].size() != rows * observed_cards_[v]) {
      throw ContractError("CPT of '" + graph_.name(v) + "' has the wrong size");
    }
    check_rows(cpts_[v], observed_cards_[v], "CPT of '" + graph_.name(v) + "'");
  }
}

double ScmModel::conditional(NodeId v, std::span<const std::size_t> observed,
                             std::span<const std::size_t> latent) const {
  std::size_t row = 0;
  for (NodeId p : graph_.parents(v)) row = row * observed_cards_[p] + observed[p];
  for (std::size_t u : latent_parents_[v]) row = row * latent_cards_[u] + latent[u];
  return cpts_[v][row * observed_cards_[v] + observed[v]];
}

double ScmModel::min_entry() const {
  double lo = 1.0;
  for (const auto& row : latent_priors_) lo = std::min(lo, *std::min_element(row.begin(), row.end()));
  for (const auto& row : cpts_) lo = std::min(lo, *std::min_element(row.begin(), row.end()));
  return lo;
}

ScmModel random_model(const Admg& g, const ModelConfig& config, std::uint64_t seed) {
  if (config.observed_card < 2 || config.latent_card < 2) {
    throw ContractError("cardinalities must be at least 2");
  }
  std::mt19937_64 rng(splitmix64(seed));
  const std::size_t n = g.size();
  std::vector<std::size_t> cards(n, config.observed_card);
  for (const auto& [id, card] : config.card_overrides) {
    if (id >= n) throw ContractError("cardinality override for an unknown variable");
    if (card < 2) throw ContractError("cardinalities must be at least 2");
    cards[id] = card;
  }
  const std::size_t n_latent = g.bidirected_edges().size();
  std::vector<std::size_t> latent_cards(n_latent, config.latent_card);
  std::vector<std::vector<double>> priors;
  for (std::size_t k = 0; k < n_latent; ++k) {
    priors.push_back(random_row(config.latent_card, config.epsilon, rng));
  }
  std::vector<std::size_t> latent_count(n, 0);
  for (const Edge& e : g.bidirected_edges()) {
    ++latent_count[e.from];
    ++latent_count[e.to];
  }
  std::vector<std::vector<double>> cpts(n);
  for (NodeId v = 0; v < n; ++v) {
    std::size_t rows = 1;
    for (NodeId p : g.parents(v)) rows *= cards[p];
    for (std::size_t k = 0; k < latent_count[v]; ++k) rows *= config.latent_card;
    for (std::size_t r = 0; r < rows; ++r) {
      auto row = random_row(cards[v], config.epsilon, rng);
      cpts[v].insert(cpts[v].end(), row.begin(), row.end());
    }
  }
  return ScmModel(g, std::move(cards), std::move(latent_cards), std::move(priors), std::move(cpts));
}

JointTable observed_joint(const ScmModel& m, std::size_t max_states) {
  std::vector<bool> include(m.graph().size(), true);
  auto probs = latent_mixture(m, include, {}, max_states);
  return JointTable(m.graph().names(), m.observed_cards(), std::move(probs));
}

double PostInterventionTable::probability(std::span<const std::size_t> full) const {
  for (const auto& [id, value] : treatment_values) {
    if (full[id] != value) return 0.0;
  }
  std::vector<std::size_t> values;
  values.reserve(vars.size());
  for (NodeId v : vars) values.push_back(full[v]);
  return table.at(values);
}

PostInterventionTable post_intervention(const ScmModel& m, const Assignment& t,
                                        std::size_t max_states) {
  check_assignment(m, t, "intervention");
  const std::size_t n = m.graph().size();
  std::vector<bool> include(n, true);
  VarSet treatment;
  for (const auto& [id, value] : t) {
    include[id] = false;
    treatment.insert(id);
  }
  auto probs = latent_mixture(m, include, t, max_states);
  std::vector<NodeId> vars;
  std::vector<std::string> names;
  std::vector<std::size_t> cards;
  for (NodeId v = 0; v < n; ++v) {
    if (t.contains(v)) continue;
    vars.push_back(v);
    names.push_back(m.graph().name(v));
    cards.push_back(m.observed_cards()[v]);
  }
  return PostInterventionTable{std::move(treatment), t, std::move(vars),
                               JointTable(std::move(names), std::move(cards), std::move(probs))};
}

std::vector<double> q_oracle(const ScmModel& m, const VarSet& c, std::size_t max_states) {
  std::vector<bool> include(m.graph().size(), false);
  for (NodeId v : c) include.at(v) = true;
  return latent_mixture(m, include, {}, max_states);
}

double oracle_conditional(const ScmModel& m, const Assignment& t, const Assignment& s,
                          const Assignment& c, std::size_t max_states) {
  check_assignment(m, s, "outcome");
  check_assignment(m, c, "condition");
  for (const auto& [id, value] : s) {
    if (t.contains(id) || c.contains(id)) throw ContractError("query sets must be disjoint");
  }
  for (const auto& [id, value] : c) {
    if (t.contains(id)) throw ContractError("query sets must be disjoint");
  }
  const PostInterventionTable post = post_intervention(m, t, max_states);
  Assignment sc = s;
  sc.insert(c.begin(), c.end());
  const auto sc_pos = positions_of(post.vars, sc);
  const auto c_pos = positions_of(post.vars, c);
  std::vector<std::size_t> sc_values;
  std::vector<std::size_t> c_values;
  for (const auto& [id, value] : sc) sc_values.push_back(value);
  for (const auto& [id, value] : c) c_values.push_back(value);
  const double joint = post.table.marginal(sc_pos)[marginal_index(post.table, sc_pos, sc_values)];
  const double cond = post.table.marginal(c_pos)[marginal_index(post.table, c_pos, c_values)];
  if (cond == 0.0) throw PositivityError("P_t(c) is zero");
  return joint / cond;
}

VerifyReport verify_expression(const Admg& g, const Expr& expr, const Query& q,
                               const VerifyConfig& config) {
  const VarSet& t = q.treatment;
  const VarSet& s = q.outcome;
  const VarSet& c = q.condition;
  if (t.intersects(s) || t.intersects(c) || s.intersects(c)) {
    throw ContractError("query sets must be disjoint");
  }
  if (!expr->free_vars().is_subset_of(t | s | c)) {
    throw ContractError("expression has free variables outside T ∪ S ∪ C");
  }
  VerifyReport report;
  report.n_models = config.n_models;
  report.tolerance = config.tolerance;

  const std::size_t n = g.size();
  for (std::size_t model_index = 0; model_index < config.n_models; ++model_index) {
    const ScmModel m = random_model(g, config.model, splitmix64(config.seed) + model_index);
    const JointTable joint = observed_joint(m, config.model.max_states);
    Evaluator ev(joint);
    const DenseTable& values = ev.tabulate(expr);

    std::vector<std::size_t> t_cards;
    for (NodeId v : t) t_cards.push_back(m.observed_cards()[v]);
    std::vector<NodeId> sc_vars(s.begin(), s.end());
    sc_vars.insert(sc_vars.end(), c.begin(), c.end());
    std::sort(sc_vars.begin(), sc_vars.end());

    double worst = 0.0;
    std::vector<std::size_t> full(n, 0);
    std::vector<std::size_t> t_digits(t.size(), 0);
    do {
      Assignment t_assign;
      for (std::size_t k = 0; k < t.size(); ++k) {
        t_assign[t.ids()[k]] = t_digits[k];
        full[t.ids()[k]] = t_digits[k];
      }
      const PostInterventionTable post = post_intervention(m, t_assign, config.model.max_states);
      std::vector<std::size_t> sc_pos;
      std::vector<std::size_t> c_pos;
      for (std::size_t k = 0; k < post.vars.size(); ++k) {
        if (s.contains(post.vars[k]) || c.contains(post.vars[k])) sc_pos.push_back(k);
        if (c.contains(post.vars[k])) c_pos.push_back(k);
      }
      const auto p_sc = post.table.marginal(sc_pos);
      const auto p_c = post.table.marginal(c_pos);

      std::vector<std::size_t> sc_cards;
      for (NodeId v : sc_vars) sc_cards.push_back(m.observed_cards()[v]);
      std::vector<std::size_t> sc_digits(sc_vars.size(), 0);
      do {
        std::vector<std::size_t> c_values;
        for (std::size_t k = 0; k < sc_vars.size(); ++k) {
          full[sc_vars[k]] = sc_digits[k];
          if (c.contains(sc_vars[k])) c_values.push_back(sc_digits[k]);
        }
        const double truth =
            p_sc[marginal_index(post.table, sc_pos, sc_digits)] /
            p_c[marginal_index(post.table, c_pos, c_values)];
        const double got = values.at_full(full);
        const double dev = std::isfinite(got) ? std::abs(got - truth) : INFINITY;
        worst = std::max(worst, dev);
        ++report.n_assignments;
      } while (next_assignment(sc_digits, sc_cards));
    } while (next_assignment(t_digits, t_cards));

    report.per_model_worst.push_back(worst);
    report.max_abs_deviation = std::max(report.max_abs_deviation, worst);
  }
  report.pass = report.max_abs_deviation <= report.tolerance;
  return report;
}

VerifyReport verify_query(const Admg& g, const Query& q, const VerifyConfig& config,
                          const EffectOptions& options) {
  const QueryResult result = conditional_effect(g, q, options);
  if (!result.identifiable()) throw ContractError("query is not identified; nothing to verify");
  return verify_expression(g, result.expression(), q, config);
}

std::string to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["n_models"] = report.n_models;
  j["n_assignments"] = report.n_assignments;
  j["max_abs_deviation"] = report.max_abs_deviation;
  j["per_model_worst"] = report.per_model_worst;
  j["tolerance"] = report.tolerance;
  j["pass"] = report.pass;
  return j.dump();
}

}  // namespace causalid
