#include "causalid/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "causalid/error.hpp"

namespace causalid {
namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

// Arrows need no surrounding whitespace: "A->B" reads like "A -> B".
std::string space_arrows(std::string_view line) {
  std::string out;
  for (std::size_t i = 0; i < line.size();) {
    if (line.substr(i, 3) == "<->") {
      out += " <-> ";
      i += 3;
    } else if (line.substr(i, 2) == "->") {
      out += " -> ";
      i += 2;
    } else {
      out += line[i++];
    }
  }
  return out;
}

}  // namespace

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  for (char ch : name) {
    auto c = static_cast<unsigned char>(ch);
    if (!(std::isalnum(c) || c == '_')) return false;
  }
  return true;
}

Admg parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, NodeId> index;
  std::vector<Edge> directed;
  std::vector<Edge> bidirected;
  std::vector<std::vector<NodeId>> out_edges;

  // True when `to` already reaches `from`, i.e. from -> to would close a cycle.
  auto reaches = [&](NodeId to, NodeId from) {
    std::vector<bool> seen(names.size(), false);
    std::vector<NodeId> stack{to};
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      if (v == from) return true;
      if (seen[v]) continue;
      seen[v] = true;
      for (NodeId c : out_edges[v]) stack.push_back(c);
    }
    return false;
  };

  auto lookup = [&](const std::string& name, std::size_t line_no) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw ParseError(line_no, "undeclared node '" + name + "'");
    }
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(space_arrows(line));
    if (tokens.empty()) continue;

    if (tokens[0] == "node") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'node <name>'");
      if (!is_valid_name(tokens[1])) {
        throw ParseError(line_no, "invalid node name '" + tokens[1] + "'");
      }
      if (!index.emplace(tokens[1], static_cast<NodeId>(names.size())).second) {
        throw ParseError(line_no, "duplicate node '" + tokens[1] + "'");
      }
      names.push_back(tokens[1]);
      out_edges.emplace_back();
    } else if (tokens.size() == 3 && (tokens[1] == "->" || tokens[1] == "<->")) {
      NodeId a = lookup(tokens[0], line_no);
      NodeId b = lookup(tokens[2], line_no);
      if (a == b) throw ParseError(line_no, "self-loop on '" + tokens[0] + "'");
      if (tokens[1] == "->") {
        if (reaches(b, a)) throw ParseError(line_no, "edge closes a directed cycle");
        directed.push_back({a, b});
        out_edges[a].push_back(b);
      } else {
        bidirected.push_back({a, b});
      }
    } else {
      throw ParseError(line_no, "unrecognized statement '" + std::string(line) + "'");
    }
    if (eol == text.size()) break;
  }

  try {
    return Admg(std::move(names), std::move(directed), std::move(bidirected));
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
}

Admg read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open graph file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const Admg& g) {
  std::ostringstream out;
  for (const auto& name : g.names()) out << "node " << name << '\n';
  for (const Edge& e : g.directed_edges()) {
    out << g.name(e.from) << " -> " << g.name(e.to) << '\n';
  }
  for (const Edge& e : g.bidirected_edges()) {
    out << g.name(e.from) << " <-> " << g.name(e.to) << '\n';
  }
  return out.str();
}

}  // namespace causalid
