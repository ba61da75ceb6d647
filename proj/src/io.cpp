#include "wcg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace wcg {

namespace {

int parse_index(const std::string& tok, int n, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw FileParseError(line, "expected a vertex number, got '" + tok + "'");
  }
  if (used != tok.size()) throw FileParseError(line, "expected a vertex number, got '" + tok + "'");
  if (v < 1 || v > n) throw FileParseError(line, "vertex " + tok + " out of range 1.." + std::to_string(n));
  return v - 1;
}

Cyclotomic parse_literal(const std::string& tok, int line) {
  try {
    return parse_scalar(tok);
  } catch (const std::exception& e) {
    throw FileParseError(line, "bad scalar '" + tok + "': " + e.what());
  }
}

Label parse_label(const std::string& tok, int line) {
  try {
    return Label::parse(tok);
  } catch (const std::exception& e) {
    throw FileParseError(line, "bad label '" + tok + "': " + e.what());
  }
}

struct EdgeSpec {
  int i, j;
  Label m;
  std::optional<Cyclotomic> w;
  int line;
};

struct ArcSpec {
  int i, j;
  Cyclotomic w;
  int line;
};

GraphFile assemble(int n, const std::string& name, const std::vector<EdgeSpec>& edges, const std::vector<ArcSpec>& arcs,
                   std::optional<Position> start) {
  GraphFile out;
  out.name = name;
  out.graph = CoxeterGraph(n);
  for (const auto& e : edges) {
    try {
      out.graph.add_edge(e.i, e.j, e.m);
    } catch (const std::exception& ex) {
      throw FileParseError(e.line, ex.what());
    }
    // an edge without w= whose pair has arcs takes its weights from the arcs alone
    if (!e.w && std::any_of(arcs.begin(), arcs.end(), [&](const ArcSpec& a) {
          return (a.i == e.i && a.j == e.j) || (a.i == e.j && a.j == e.i);
        }))
      continue;
    const Cyclotomic w = e.w.value_or(Cyclotomic(1));
    if (w.is_zero())
      out.weights.set(e.i, e.j, w);  // left for the validator to report
    else
      out.weights.set_reciprocal(e.i, e.j, w);
  }
  for (const auto& a : arcs) out.weights.set(a.i, a.j, a.w);
  out.start = std::move(start);
  return out;
}

}  // namespace

GraphFile parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0, n = -1;
  std::string name;
  std::vector<EdgeSpec> edges;
  std::vector<ArcSpec> arcs;
  std::optional<Position> start;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "name") {
      name.clear();
      for (std::size_t k = 1; k < tok.size(); ++k) name += (k > 1 ? " " : "") + tok[k];
      continue;
    }
    if (kw == "vertices") {
      if (n >= 0) throw FileParseError(lineno, "duplicate 'vertices' line");
      if (tok.size() != 2) throw FileParseError(lineno, "expected 'vertices N'");
      try {
        std::size_t used = 0;
        n = std::stoi(tok[1], &used);
        if (used != tok[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw FileParseError(lineno, "bad vertex count '" + tok[1] + "'");
      }
      if (n < 1) throw FileParseError(lineno, "vertex count must be positive");
      continue;
    }
    if (n < 0) throw FileParseError(lineno, "'" + kw + "' before 'vertices N'");
    if (kw == "edge" || kw == "arc") {
      if (tok.size() < 3) throw FileParseError(lineno, "expected '" + kw + " i j ...'");
      const int i = parse_index(tok[1], n, lineno), j = parse_index(tok[2], n, lineno);
      std::optional<Label> m;
      std::optional<Cyclotomic> w;
      for (std::size_t k = 3; k < tok.size(); ++k) {
        const auto eq = tok[k].find('=');
        if (eq == std::string::npos) throw FileParseError(lineno, "expected key=value, got '" + tok[k] + "'");
        const std::string key = tok[k].substr(0, eq), val = tok[k].substr(eq + 1);
        if (key == "m" && kw == "edge" && !m) {
          m = parse_label(val, lineno);
        } else if (key == "w" && !w) {
          w = parse_literal(val, lineno);
        } else {
          throw FileParseError(lineno, "unexpected field '" + key + "'");
        }
      }
      if (kw == "edge") {
        edges.push_back({i, j, m.value_or(Label(3)), w, lineno});
      } else {
        if (!w) throw FileParseError(lineno, "arc needs w=<literal>");
        arcs.push_back({i, j, *w, lineno});
      }
      continue;
    }
    if (kw == "start") {
      if (static_cast<int>(tok.size()) != n + 1)
        throw FileParseError(lineno, "start needs " + std::to_string(n) + " values, got " + std::to_string(tok.size() - 1));
      Position p(n);
      for (int k = 0; k < n; ++k) p(k) = parse_literal(tok[static_cast<std::size_t>(k + 1)], lineno);
      start = std::move(p);
      continue;
    }
    throw FileParseError(lineno, "unknown keyword '" + kw + "'");
  }
  if (n < 0) throw FileParseError(lineno, "missing 'vertices N'");
  return assemble(n, name, edges, arcs, std::move(start));
}

GraphFile parse_graph_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FileParseError(0, "graph JSON must be an object");
  auto literal = [](const nlohmann::json& v) -> Cyclotomic {
    if (v.is_number_integer()) return Cyclotomic(v.get<long>());
    if (v.is_string()) return parse_literal(v.get<std::string>(), 0);
    throw FileParseError(0, "scalars must be strings or integers, got " + v.dump());
  };
  auto index = [](const nlohmann::json& v, int n) {
    if (!v.is_number_integer()) throw FileParseError(0, "vertex must be an integer, got " + v.dump());
    return parse_index(std::to_string(v.get<long>()), n, 0);
  };
  try {
    if (!j.contains("vertices") || !j["vertices"].is_number_integer()) throw FileParseError(0, "missing integer 'vertices'");
    const int n = j["vertices"].get<int>();
    if (n < 1) throw FileParseError(0, "vertex count must be positive");
    std::vector<EdgeSpec> edges;
    std::vector<ArcSpec> arcs;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      EdgeSpec s{index(e.at("i"), n), index(e.at("j"), n), Label(3), std::nullopt, 0};
      if (e.contains("m")) s.m = parse_label(e["m"].is_string() ? e["m"].get<std::string>() : e["m"].dump(), 0);
      if (e.contains("w")) s.w = literal(e["w"]);
      edges.push_back(s);
    }
    for (const auto& a : j.value("arcs", nlohmann::json::array()))
      arcs.push_back({index(a.at("i"), n), index(a.at("j"), n), literal(a.at("w")), 0});
    std::optional<Position> start;
    if (j.contains("start")) {
      const auto& s = j["start"];
      if (!s.is_array() || static_cast<int>(s.size()) != n)
        throw FileParseError(0, "start needs " + std::to_string(n) + " values");
      Position p(n);
      for (int k = 0; k < n; ++k) p(k) = literal(s[static_cast<std::size_t>(k)]);
      start = std::move(p);
    }
    return assemble(n, j.value("name", std::string()), edges, arcs, std::move(start));
  } catch (const nlohmann::json::exception& e) {
    throw FileParseError(0, std::string("malformed graph JSON: ") + e.what());
  }
}

GraphFile parse_graph(const std::string& content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '{') break;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
      throw FileParseError(0, std::string("invalid JSON: ") + e.what());
    }
    return parse_graph_json(j);
  }
  return parse_graph_text(content);
}

GraphFile load_graph_file(const std::string& path) {
  if (auto p = preset_text(path); p && !std::ifstream(path)) return parse_graph(*p);
  std::ifstream in(path);
  if (!in) throw FileParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

namespace {

// An edge is written with w= when its two weights are mutually inverse;
// anything else goes out as explicit arcs.
bool reciprocal_edge(const GraphFile& g, const Edge& e) {
  const auto* fw = g.weights.find(e.i, e.j);
  const auto* bw = g.weights.find(e.j, e.i);
  return fw && bw && !fw->is_zero() && fw->inverse() == *bw;
}

std::vector<std::pair<std::pair<Vertex, Vertex>, Cyclotomic>> explicit_arcs(const GraphFile& g) {
  std::vector<std::pair<std::pair<Vertex, Vertex>, Cyclotomic>> out;
  for (const auto& [key, w] : g.weights.entries()) {
    const auto [i, j] = key;
    if (g.graph.adjacent(i, j) && reciprocal_edge(g, {std::min(i, j), std::max(i, j), g.graph.label(i, j)})) continue;
    out.push_back({key, w});
  }
  return out;
}

}  // namespace

std::string graph_to_text(const GraphFile& g) {
  std::ostringstream os;
  if (!g.name.empty()) os << "name " << g.name << "\n";
  os << "vertices " << g.graph.vertex_count() << "\n";
  for (const auto& e : g.graph.edges()) {
    os << "edge " << e.i + 1 << " " << e.j + 1 << " m=" << e.m.to_string();
    if (reciprocal_edge(g, e)) os << " w=" << g.weights.at(e.i, e.j).to_string();
    os << "\n";
  }
  for (const auto& [key, w] : explicit_arcs(g))
    os << "arc " << key.first + 1 << " " << key.second + 1 << " w=" << w.to_string() << "\n";
  if (g.start) {
    os << "start";
    for (Index k = 0; k < g.start->size(); ++k) os << " " << (*g.start)(k).to_string();
    os << "\n";
  }
  return os.str();
}

nlohmann::json graph_to_json(const GraphFile& g) {
  nlohmann::json j;
  j["name"] = g.name;
  j["vertices"] = g.graph.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.graph.edges()) {
    nlohmann::json ej{{"i", e.i + 1}, {"j", e.j + 1}, {"m", e.m.to_string()}};
    if (reciprocal_edge(g, e)) ej["w"] = g.weights.at(e.i, e.j).to_string();
    j["edges"].push_back(ej);
  }
  j["arcs"] = nlohmann::json::array();
  for (const auto& [key, w] : explicit_arcs(g))
    j["arcs"].push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"w", w.to_string()}});
  if (g.start) {
    j["start"] = nlohmann::json::array();
    for (Index k = 0; k < g.start->size(); ++k) j["start"].push_back((*g.start)(k).to_string());
  }
  return j;
}

bool trivially_weighted(const GraphFile& g) {
  for (const auto& [key, w] : g.weights.entries())
    if (!w.is_one()) return false;
  return validate_legal(g.graph, g.weights).empty();
}

GameSetup setup_game(const GraphFile& g, bool asymmetric_k) {
  const auto l = asymmetric_k ? EdgeCoefficients::integral(g.graph) : EdgeCoefficients::symmetric(g.graph);
  GameSetup s;
  if (trivially_weighted(g)) {
    s.game = NumbersGame::classical(g.graph, l);
    return s;
  }
  s.generalized = true;
  s.check = validate_generalized_weights(g.graph, g.weights, l);
  if (s.check.ok()) s.game = NumbersGame::generalized(g.graph, g.weights, l);
  return s;
}

namespace {

const std::map<std::string, std::string>& presets() {
  static const std::map<std::string, std::string> table{
      {"a2", "name A2\nvertices 2\nedge 1 2\n"},
      {"s4-chain", "name S4 chain\nvertices 3\nedge 1 2 w=1\nedge 2 3 w=1\n"},
      {"s4-chain-weighted", "name S4 chain with weights a, b\nvertices 3\nedge 1 2 w=2*zeta(5)\nedge 2 3 w=-1/3\n"},
      {"six-vertex-signed",
       "name six-vertex signed graph\nvertices 6\n"
       "edge 1 2 w=-1\nedge 2 3 w=-1\nedge 2 4 w=1\nedge 3 5 w=-1\nedge 4 5 w=1\nedge 5 6 w=1\n"},
      {"four-cycle-signed",
       "name four-cycle, one negative edge\nvertices 4\nedge 1 2 w=1\nedge 2 3 w=1\nedge 3 4 w=1\nedge 4 1 w=-1\n"},
      {"four-cycle-affine",
       "name four-cycle, weight 2\nvertices 4\nedge 1 2 w=1\nedge 2 3 w=1\nedge 3 4 w=1\nedge 4 1 w=2\n"},
      {"imo-pentagon",
       "name IMO pentagon\nvertices 5\nedge 1 2\nedge 2 3\nedge 3 4\nedge 4 5\nedge 5 1\nstart 2 -3 4 -1 1\n"},
  };
  return table;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : presets()) out.push_back(k);
  return out;
}

std::optional<std::string> preset_text(const std::string& name) {
  auto it = presets().find(name);
  if (it == presets().end()) return std::nullopt;
  return it->second;
}

}  // namespace wcg
