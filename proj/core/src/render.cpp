#include "causalid/render.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

#include <json.hpp>

#include "causalid/error.hpp"

namespace causalid {
namespace {

using nlohmann::json;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Prints a tree, tracking how many enclosing binders each variable has so
// a shadowing binder gets a prime. Free variables of the root count as one
// binder, so a sum that rebinds a free variable is primed too.
class InfixPrinter {
 public:
  InfixPrinter(std::span<const std::string> names, bool latex) : names_(names), latex_(latex) {}

  std::string print_root(const Expr& e) {
    for (NodeId v : e->free_vars()) depth_[v] = 1;
    return print(e);
  }

  std::string print(const Expr& e) {
    switch (e->kind()) {
      case ExprKind::one:
        return "1";
      case ExprKind::factor: {
        std::string out = "P(" + value(e->var());
        if (!e->context().empty()) {
          out += latex_ ? " \\mid " : "|";
          out += join(e->context());
        }
        return out + ")";
      }
      case ExprKind::product: {
        std::string out;
        for (const auto& t : e->terms()) {
          if (!out.empty()) out += latex_ ? " \\, " : " ";
          const bool wrap = t->kind() == ExprKind::sum ||
                            (!latex_ && t->kind() == ExprKind::quotient);
          out += wrap ? open() + print(t) + close() : print(t);
        }
        return out;
      }
      case ExprKind::sum: {
        for (NodeId v : e->sum_vars()) ++depth_[v];
        std::string head = latex_ ? "\\sum_{" + join(e->sum_vars()) + "} "
                                  : "Σ_" + subscript(e->sum_vars()) + " ";
        std::string out = head + print(e->body());
        for (NodeId v : e->sum_vars()) --depth_[v];
        return out;
      }
      case ExprKind::quotient:
        if (latex_) {
          return "\\frac{" + print(e->numerator()) + "}{" + print(e->denominator()) + "}";
        }
        return "(" + print(e->numerator()) + ") / (" + print(e->denominator()) + ")";
    }
    return {};
  }

 private:
  std::string value(NodeId id) const {
    std::string out = lower(names_[id]);
    auto it = depth_.find(id);
    // The outermost binder and free occurrences print bare.
    const int primes = it == depth_.end() ? 0 : std::max(0, it->second - 1);
    if (latex_ && primes > 0) return out + "^{" + std::string(static_cast<std::size_t>(primes), '\'') + "}";
    return out + std::string(static_cast<std::size_t>(primes), '\'');
  }

  std::string join(const VarSet& vars) const {
    std::string out;
    for (NodeId v : vars) {
      if (!out.empty()) out += ',';
      out += value(v);
    }
    return out;
  }

  std::string subscript(const VarSet& vars) const {
    std::string inner = join(vars);
    return vars.size() == 1 ? inner : "{" + inner + "}";
  }

  std::string open() const { return latex_ ? "\\left[" : "["; }
  std::string close() const { return latex_ ? "\\right]" : "]"; }

  std::span<const std::string> names_;
  bool latex_;
  std::map<NodeId, int> depth_;
};

json names_json(const VarSet& vars, std::span<const std::string> names) {
  json out = json::array();
  for (NodeId v : vars) out.push_back(names[v]);
  return out;
}

json to_json(const Expr& e, std::span<const std::string> names) {
  json out;
  switch (e->kind()) {
    case ExprKind::one:
      out["kind"] = "one";
      break;
    case ExprKind::factor:
      out["kind"] = "factor";
      out["var"] = names[e->var()];
      out["given"] = names_json(e->context(), names);
      break;
    case ExprKind::product: {
      out["kind"] = "product";
      json terms = json::array();
      for (const auto& t : e->terms()) terms.push_back(to_json(t, names));
      out["terms"] = std::move(terms);
      break;
    }
    case ExprKind::sum:
      out["kind"] = "sum";
      out["over"] = names_json(e->sum_vars(), names);
      out["body"] = to_json(e->body(), names);
      break;
    case ExprKind::quotient:
      out["kind"] = "quotient";
      out["numerator"] = to_json(e->numerator(), names);
      out["denominator"] = to_json(e->denominator(), names);
      break;
  }
  if (e->q_scope()) out["q_scope"] = names_json(*e->q_scope(), names);
  return out;
}

class JsonReader {
 public:
  explicit JsonReader(std::span<const std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], static_cast<NodeId>(i));
  }

  Expr read(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
      throw ParseError(0, "expression node needs a string 'kind'");
    }
    const std::string kind = j["kind"];
    Expr out;
    if (kind == "one") {
      out = one();
    } else if (kind == "factor") {
      out = factor(var(field(j, "var")), vars(field(j, "given")));
    } else if (kind == "product") {
      const json& terms = field(j, "terms");
      if (!terms.is_array()) throw ParseError(0, "'terms' must be an array");
      std::vector<Expr> parts;
      for (const auto& t : terms) parts.push_back(read(t));
      out = product(std::move(parts));
    } else if (kind == "sum") {
      out = sum(vars(field(j, "over")), read(field(j, "body")));
    } else if (kind == "quotient") {
      out = quotient(read(field(j, "numerator")), read(field(j, "denominator")));
    } else {
      throw ParseError(0, "unknown expression kind '" + kind + "'");
    }
    if (j.contains("q_scope")) out = with_q_scope(out, vars(j["q_scope"]));
    return out;
  }

 private:
  static const json& field(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(0, std::string("missing field '") + key + "'");
    return j[key];
  }

  NodeId var(const json& j) const {
    if (!j.is_string()) throw ParseError(0, "variable names must be strings");
    auto it = index_.find(j.get<std::string>());
    if (it == index_.end()) throw ParseError(0, "unknown variable '" + j.get<std::string>() + "'");
    return it->second;
  }

  VarSet vars(const json& j) const {
    if (!j.is_array()) throw ParseError(0, "variable lists must be arrays");
    std::vector<NodeId> ids;
    for (const auto& v : j) ids.push_back(var(v));
    return VarSet(std::move(ids));
  }

  std::map<std::string, NodeId> index_;
};

}  // namespace

std::optional<RenderFormat> parse_render_format(std::string_view name) {
  if (name == "text") return RenderFormat::text;
  if (name == "latex") return RenderFormat::latex;
  if (name == "json") return RenderFormat::json;
  return std::nullopt;
}

std::string render(const Expr& e, std::span<const std::string> names, RenderFormat format) {
  if (tree_size(e, kMaxRenderNodes + 1) > kMaxRenderNodes) {
    throw RenderSizeError("expression tree too large to render (" + std::to_string(dag_size(e)) +
                          " shared nodes)");
  }
  switch (format) {
    case RenderFormat::text:
      return InfixPrinter(names, false).print_root(e);
    case RenderFormat::latex:
      return InfixPrinter(names, true).print_root(e);
    case RenderFormat::json:
      return to_json(e, names).dump();
  }
  return {};
}

Expr parse_expr_json(std::string_view text, std::span<const std::string> names) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(0, std::string("invalid JSON: ") + err.what());
  }
  try {
    return JsonReader(names).read(j);
  } catch (const ContractError& err) {
    throw ParseError(0, err.what());
  }
}

}  // namespace causalid
