#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "causalid/graph_io.hpp"

namespace causalid::testing {
namespace {

// Row of v's CPT for the given observed and latent values.
double cpt_entry(const ScmModel& m, NodeId v, std::span<const std::size_t> obs,
                 const std::vector<std::size_t>& lat) {
  std::size_t row = 0;
  for (NodeId p : m.graph().parents(v)) row = row * m.observed_cards()[p] + obs[p];
  for (std::size_t u : m.latents_of(v)) row = row * m.latent_cards()[u] + lat[u];
  return m.cpt(v)[row * m.observed_cards()[v] + obs[v]];
}

// Σ_u P(u) Π_{i ∈ include} P(v_i | pa_i, u^i).
double mixture(const ScmModel& m, const VarSet& include, std::span<const std::size_t> obs) {
  std::vector<std::size_t> lat(m.num_latents(), 0);
  double total = 0.0;
  while (true) {
    double p = 1.0;
    for (std::size_t u = 0; u < lat.size(); ++u) p *= m.latent_prior(u)[lat[u]];
    for (NodeId v : include) p *= cpt_entry(m, v, obs, lat);
    total += p;
    std::size_t k = lat.size();
    while (k > 0) {
      --k;
      if (++lat[k] < m.latent_cards()[k]) break;
      lat[k] = 0;
      if (k == 0) return total;
    }
    if (lat.empty()) return total;
  }
}

bool consistent(std::span<const std::size_t> full, const Assignment& a) {
  return std::all_of(a.begin(), a.end(), [&](const auto& kv) { return full[kv.first] == kv.second; });
}

}  // namespace

Admg load_fixture(std::string_view name) {
  return read_graph_file(std::string(CAUSALID_TEST_DATA_DIR) + "/" + std::string(name) + ".graph");
}

VarSet vars(const Admg& g, std::string_view list) {
  std::vector<std::string> names;
  std::stringstream in{std::string(list)};
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) names.push_back(item);
  }
  return g.varset(names);
}

JointTable random_table(const std::vector<std::string>& names, std::span<const std::size_t> cards,
                        std::mt19937_64& rng) {
  std::size_t states = 1;
  for (std::size_t c : cards) states *= c;
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::vector<double> probs(states);
  for (double& p : probs) p = unit(rng);
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  for (double& p : probs) p /= total;
  // Push rounding residue into the largest entry so the total is one.
  const double residue = 1.0 - std::accumulate(probs.begin(), probs.end(), 0.0);
  *std::max_element(probs.begin(), probs.end()) += residue;
  return JointTable(names, std::vector<std::size_t>(cards.begin(), cards.end()), std::move(probs));
}

double brute_prob(const JointTable& table, const Assignment& partial) {
  std::vector<std::size_t> row(table.num_vars(), 0);
  double total = 0.0;
  for (double p : table.probs()) {
    if (consistent(row, partial)) total += p;
    for (std::size_t k = row.size(); k-- > 0;) {
      if (++row[k] < table.cards()[k]) break;
      row[k] = 0;
    }
  }
  return total;
}

double brute_q(const ScmModel& m, const VarSet& c, std::span<const std::size_t> full) {
  return mixture(m, c, full);
}

double brute_conditional(const ScmModel& m, const Assignment& t, const Assignment& s,
                         const Assignment& c) {
  const std::size_t n = m.graph().size();
  VarSet rest = m.graph().all();
  for (const auto& [id, v] : t) rest.erase(id);
  std::vector<std::size_t> full(n, 0);
  double joint = 0.0;
  double cond = 0.0;
  for (const Assignment& a : all_assignments(m.graph().all(), m.observed_cards())) {
    for (const auto& [id, v] : a) full[id] = v;
    if (!consistent(full, t) || !consistent(full, c)) continue;
    const double p = mixture(m, rest, full);
    cond += p;
    if (consistent(full, s)) joint += p;
  }
  return joint / cond;
}

Query random_query(const Admg& g, std::mt19937_64& rng) {
  std::vector<NodeId> ids(g.size());
  std::iota(ids.begin(), ids.end(), NodeId{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  const std::size_t n = ids.size();
  std::uniform_int_distribution<std::size_t> pick_t(1, std::max<std::size_t>(1, n / 3));
  const std::size_t nt = pick_t(rng);
  std::uniform_int_distribution<std::size_t> pick_s(1, std::max<std::size_t>(1, std::min<std::size_t>(2, n - nt - 1)));
  const std::size_t ns = pick_s(rng);
  std::uniform_int_distribution<std::size_t> pick_c(0, std::min<std::size_t>(2, n - nt - ns));
  const std::size_t nc = pick_c(rng);
  Query q;
  for (std::size_t i = 0; i < nt; ++i) q.treatment.insert(ids[i]);
  for (std::size_t i = nt; i < nt + ns; ++i) q.outcome.insert(ids[i]);
  for (std::size_t i = nt + ns; i < nt + ns + nc; ++i) q.condition.insert(ids[i]);
  return q;
}

Admg permute_nodes(const Admg& g, std::span<const NodeId> perm) {
  std::vector<NodeId> new_id(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = static_cast<NodeId>(i);
  std::vector<std::string> names;
  for (NodeId old : perm) names.push_back(g.name(old));
  std::vector<Edge> directed;
  for (const Edge& e : g.directed_edges()) directed.push_back({new_id[e.from], new_id[e.to]});
  std::vector<Edge> bidirected;
  for (const Edge& e : g.bidirected_edges()) bidirected.push_back({new_id[e.from], new_id[e.to]});
  return Admg(std::move(names), std::move(directed), std::move(bidirected));
}

VarSet permute_set(const VarSet& s, std::span<const NodeId> perm) {
  VarSet out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (s.contains(perm[i])) out.insert(static_cast<NodeId>(i));
  }
  return out;
}

std::vector<Assignment> all_assignments(const VarSet& vars, std::span<const std::size_t> cards) {
  std::vector<Assignment> out;
  std::vector<std::size_t> digits(vars.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t k = 0; k < vars.size(); ++k) a[vars.ids()[k]] = digits[k];
    out.push_back(std::move(a));
    std::size_t k = digits.size();
    bool carry = true;
    while (carry && k > 0) {
      --k;
      if (++digits[k] < cards[vars.ids()[k]]) carry = false;
      else digits[k] = 0;
    }
    if (carry) return out;
  }
}

std::vector<std::size_t> merge_full(std::size_t n, std::initializer_list<const Assignment*> parts) {
  std::vector<std::size_t> full(n, 0);
  for (const Assignment* a : parts) {
    for (const auto& [id, v] : *a) full[id] = v;
  }
  return full;
}

}  // namespace causalid::testing
