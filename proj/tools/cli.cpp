#include "cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "causalid/condid.hpp"
#include "causalid/error.hpp"
#include "causalid/graph_io.hpp"
#include "causalid/oracle.hpp"
#include "causalid/render.hpp"

namespace causalid::cli {
namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct QueryArgs {
  std::string graph;
  std::string treatment;
  std::string outcome;
  std::string condition;
  bool minimal_contexts = false;
};

VarSet parse_vars(const Admg& g, const std::string& list, const char* flag) {
  std::vector<std::string> names;
  if (list.empty()) return {};
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ContractError(std::string(flag) + ": empty variable name");
    names.push_back(item.substr(first, last - first + 1));
  }
  if (list.back() == ',') throw ContractError(std::string(flag) + ": empty variable name");
  return g.varset(names);
}

json names_of(const Admg& g, const VarSet& s) {
  json out = json::array();
  for (NodeId v : s) out.push_back(g.name(v));
  return out;
}

json blocks_of(const Admg& g, const std::vector<BlockReport>& blocks,
               const std::vector<std::size_t>& which) {
  json out = json::array();
  for (std::size_t i : which) out.push_back(names_of(g, blocks[i].block));
  return out;
}

json trace_json(const Admg& g, const std::vector<IdentifyStep>& trace) {
  json out = json::array();
  for (const auto& step : trace) {
    out.push_back({{"C", names_of(g, step.c)}, {"T", names_of(g, step.t)}, {"A", names_of(g, step.a)}});
  }
  return out;
}

json diagnostics_json(const Admg& g, const Diagnostics& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    const auto& trace = b.identified() ? std::get<IdentifySuccess>(b.outcome).trace
                                       : std::get<IdentifyFailure>(b.outcome).trace;
    blocks.push_back({{"block", names_of(g, b.block)},
                      {"component", names_of(g, b.component)},
                      {"identified", b.identified()},
                      {"trace", trace_json(g, trace)}});
  }
  json out = {{"D", names_of(g, d.d)}, {"F", names_of(g, d.f)}, {"blocks", blocks}};
  if (d.partition) {
    const PartitionState& p = *d.partition;
    out["partition"] = {{"N", blocks_of(g, d.blocks, p.n_set)},
                        {"I", blocks_of(g, d.blocks, p.i_set)},
                        {"F0", names_of(g, p.f0)},
                        {"F1", names_of(g, p.f1)},
                        {"I0", blocks_of(g, d.blocks, p.i0)},
                        {"I1", blocks_of(g, d.blocks, p.i1)},
                        {"H", names_of(g, p.h)},
                        {"H_prime", names_of(g, p.h_prime)},
                        {"rounds", p.rounds}};
  } else {
    out["partition"] = nullptr;
  }
  return out;
}

std::string lower_list(const Admg& g, const VarSet& s) {
  std::string out;
  for (NodeId v : s) {
    if (!out.empty()) out += ',';
    for (char ch : g.name(v)) out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

std::string query_head(const Admg& g, const Query& q, bool latex) {
  std::string t = lower_list(g, q.treatment);
  std::string head = "P_" + (q.treatment.size() == 1 && !latex ? t : "{" + t + "}") + "(" +
                     lower_list(g, q.outcome);
  if (!q.condition.empty()) head += (latex ? " \\mid " : "|") + lower_list(g, q.condition);
  return head + ")";
}

void print_failure_text(const Admg& g, const QueryResult& r, std::ostream& out) {
  const NotIdentified& f = r.failure();
  out << "not identified: " << to_string(f.reason) << '\n';
  out << "  D = " << g.format(r.diagnostics.d) << '\n';
  out << "  F = " << g.format(r.diagnostics.f) << '\n';
  for (std::size_t i : f.failing_blocks) {
    const BlockReport& b = r.diagnostics.blocks[i];
    out << "  Q[" << g.format(b.block) << "] not identified from Q[" << g.format(b.component) << "]:";
    for (const auto& step : std::get<IdentifyFailure>(b.outcome).trace) {
      out << " (C=" << g.format(step.c) << ", T=" << g.format(step.t) << ", A=" << g.format(step.a) << ")";
    }
    out << '\n';
  }
  if (f.reason == FailureReason::outcome_overlap) {
    out << "  witnesses = " << g.format(f.witnesses) << '\n';
  }
}

int cmd_identify(const QueryArgs& a, const std::string& format_name, std::ostream& out) {
  const auto format = parse_render_format(format_name);
  if (!format) throw ContractError("unknown format '" + format_name + "'");
  const Admg g = read_graph_file(a.graph);
  const Query q{parse_vars(g, a.treatment, "--do"), parse_vars(g, a.outcome, "--outcome"),
                parse_vars(g, a.condition, "--given")};
  EffectOptions options;
  if (a.minimal_contexts) options.contexts = ContextMode::minimal;
  const QueryResult r = conditional_effect(g, q, options);

  if (*format == RenderFormat::json) {
    json j = {{"schema_version", kSchemaVersion},
              {"query", {{"do", names_of(g, q.treatment)},
                         {"outcome", names_of(g, q.outcome)},
                         {"given", names_of(g, q.condition)}}},
              {"identifiable", r.identifiable()},
              {"diagnostics", diagnostics_json(g, r.diagnostics)}};
    if (r.identifiable()) {
      j["expression"] = json::parse(render(r.expression(), g.names(), RenderFormat::json));
      j["failure"] = nullptr;
    } else {
      const NotIdentified& f = r.failure();
      j["expression"] = nullptr;
      j["failure"] = {{"reason", std::string(to_string(f.reason))},
                      {"failing_blocks", blocks_of(g, r.diagnostics.blocks, f.failing_blocks)},
                      {"witnesses", names_of(g, f.witnesses)}};
    }
    out << j.dump(2) << '\n';
    return r.identifiable() ? kExitOk : kExitNotIdentified;
  }

  if (!r.identifiable()) {
    print_failure_text(g, r, out);
    return kExitNotIdentified;
  }
  const bool latex = *format == RenderFormat::latex;
  out << query_head(g, q, latex) << " = " << render(r.expression(), g.names(), *format) << '\n';
  return kExitOk;
}

int cmd_verify(const QueryArgs& a, VerifyConfig config, std::size_t observed_card,
               std::ostream& out) {
  const Admg g = read_graph_file(a.graph);
  const Query q{parse_vars(g, a.treatment, "--do"), parse_vars(g, a.outcome, "--outcome"),
                parse_vars(g, a.condition, "--given")};
  EffectOptions options;
  if (a.minimal_contexts) options.contexts = ContextMode::minimal;
  const QueryResult r = conditional_effect(g, q, options);
  if (!r.identifiable()) {
    print_failure_text(g, r, out);
    return kExitNotIdentified;
  }
  config.model.observed_card = observed_card;
  config.model.max_states = default_state_cap();
  const VerifyReport report = verify_expression(g, r.expression(), q, config);
  out << json::parse(to_json(report)).dump(2) << '\n';
  return report.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_components(const std::string& graph, const std::string& scope, std::ostream& out) {
  const Admg g = read_graph_file(graph);
  const VarSet s = scope.empty() ? g.all() : parse_vars(g, scope, "--scope");
  std::string line;
  for (const VarSet& block : c_components(g, s)) {
    if (!line.empty()) line += ' ';
    line += g.format(block);
  }
  out << line << '\n';
  return kExitOk;
}

void add_query_options(CLI::App* cmd, QueryArgs& a) {
  cmd->add_option("--graph", a.graph, "Graph file")->required();
  cmd->add_option("--do", a.treatment, "Intervened variables, comma separated")->required();
  cmd->add_option("--outcome", a.outcome, "Outcome variables, comma separated")->required();
  cmd->add_option("--given", a.condition, "Conditioning variables, comma separated");
  cmd->add_flag("--minimal-contexts", a.minimal_contexts,
                "Condition each factor on its c-component parents only");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identification of conditional causal effects in mixed graphs", "causalid"};
  app.require_subcommand(1);

  QueryArgs id_args;
  std::string format = "text";
  auto* identify_cmd = app.add_subcommand("identify", "Decide identifiability of P_t(s|c)");
  add_query_options(identify_cmd, id_args);
  identify_cmd->add_option("--format", format, "text, latex or json")
      ->check(CLI::IsMember({"text", "latex", "json"}));

  QueryArgs verify_args;
  VerifyConfig verify_config;
  std::size_t observed_card = 2;
  auto* verify_cmd = app.add_subcommand("verify", "Check the identified expression against random models");
  add_query_options(verify_cmd, verify_args);
  verify_cmd->add_option("--models", verify_config.n_models, "Number of random models")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_config.seed, "Base seed")->capture_default_str();
  verify_cmd->add_option("--tol", verify_config.tolerance, "Absolute tolerance")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--card", observed_card, "Cardinality of observed variables")
      ->capture_default_str()
      ->check(CLI::Range(2, 64));
  verify_cmd->add_option("--latent-card", verify_config.model.latent_card, "Cardinality of latents")
      ->capture_default_str()
      ->check(CLI::Range(2, 64));

  std::string comp_graph;
  std::string comp_scope;
  auto* components_cmd = app.add_subcommand("components", "List the c-components of a graph");
  components_cmd->add_option("--graph", comp_graph, "Graph file")->required();
  components_cmd->add_option("--scope", comp_scope, "Restrict to these variables");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (identify_cmd->parsed()) return cmd_identify(id_args, format, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, verify_config, observed_card, out);
    return cmd_components(comp_graph, comp_scope, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace causalid::cli
