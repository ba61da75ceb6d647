// Command-line front end: validate, classify, gauge, enumerate, play, imo,
// affine, generators, presets, serve.
//
// Exit codes: 0 success, 2 validation failure (including parse errors),
// 1 internal error.

#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "wcg/classifier.hpp"
#include "wcg/group_enum.hpp"
#include "wcg/io.hpp"
#include "wcg/service.hpp"

using namespace wcg;
using nlohmann::json;

namespace {

struct ValidationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string file;
  bool asymmetric_k = false;
  std::size_t budget = 100000;
  int bound = 5;
  std::string script;
  bool interactive = false;
  unsigned seed = 1;
  std::size_t count = 1000;
  std::string start;
  int n = 3;
  std::string a = "2";
  std::string host = "127.0.0.1";
  int port = 8080;
};

bool as_json(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const json& j, const std::string& text) {
  if (as_json(o))
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string vertices_1based(const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t k = 0; k < vs.size(); ++k) s += (k ? "," : "") + std::to_string(vs[k] + 1);
  return s + "}";
}

json vertices_json(const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

EdgeCoefficients coefficients(const Options& o, const CoxeterGraph& g) {
  return o.asymmetric_k ? EdgeCoefficients::integral(g) : EdgeCoefficients::symmetric(g);
}

void require_legal(const GraphFile& f) {
  const auto v = validate_legal(f.graph, f.weights);
  if (v.empty()) return;
  std::string msg = "illegal weights:";
  for (const auto& x : v) msg += "\n  " + x.message;
  throw ValidationFailure(msg);
}

json check_json(const GeneralizedCheck& c) {
  return {{"ok", c.ok()}, {"conditions", {c.condition1, c.condition2, c.condition3}}, {"violations", c.violations}};
}

int cmd_validate(const Options& o) {
  const auto f = load_graph_file(o.file);
  const auto legal = validate_legal(f.graph, f.weights);
  const auto coeff = validate_coefficients(f.graph, coefficients(o, f.graph));
  json j{{"vertices", f.graph.vertex_count()}, {"edges", f.graph.edges().size()}, {"legal", legal.empty()}};
  j["violations"] = json::array();
  for (const auto& v : legal) j["violations"].push_back(v.message);
  for (const auto& m : coeff) j["violations"].push_back(m);
  std::ostringstream os;
  os << "vertices " << f.graph.vertex_count() << ", edges " << f.graph.edges().size() << "\n";
  if (legal.empty() && coeff.empty()) {
    os << "weights legal\n";
    const auto cert = check_balanced(f.graph, f.weights);
    j["balanced"] = std::holds_alternative<Balanced>(cert);
    os << (std::holds_alternative<Balanced>(cert) ? "balanced\n" : "not balanced\n");
    if (!trivially_weighted(f)) {
      const auto c = validate_generalized_weights(f.graph, f.weights, coefficients(o, f.graph));
      j["generalized_game"] = check_json(c);
      os << "generalized numbers game: " << (c.ok() ? "conditions (1)-(3) hold" : "refused") << "\n";
      for (const auto& v : c.violations) os << "  " << v << "\n";
    }
  } else {
    for (const auto& v : j["violations"]) os << "violation: " << v.get<std::string>() << "\n";
  }
  emit(o, j, os.str());
  return legal.empty() && coeff.empty() ? 0 : 2;
}

int cmd_classify(const Options& o) {
  const auto f = load_graph_file(o.file);
  require_legal(f);
  const auto v = classify(f.graph, f.weights);
  emit(o, verdict_to_json(v), format_verdict(v));
  return 0;
}

int cmd_gauge(const Options& o) {
  const auto f = load_graph_file(o.file);
  require_legal(f);
  const auto cert = check_balanced(f.graph, f.weights);
  if (const auto* b = std::get_if<Balanced>(&cert)) {
    const auto j = gauge_from_potentials(b->potentials);
    json out{{"balanced", true}, {"gauge", matrix_to_json(j)}};
    out["potentials"] = json::array();
    std::ostringstream os;
    os << "balanced\npotentials";
    for (const auto& p : b->potentials) {
      out["potentials"].push_back(scalar_to_json(p));
      os << " " << p.to_string();
    }
    os << "\nJ =\n" << format_matrix(j);
    emit(o, out, os.str());
    return 0;
  }
  const auto& u = std::get<Unbalanced>(cert);
  json out{{"balanced", false}, {"cycle", path_to_json(u.cycle)}, {"weight", scalar_to_json(u.weight)}};
  std::ostringstream os;
  os << "not balanced: no gauge exists\ncycle";
  for (Vertex v : u.cycle) os << " " << v + 1;
  os << " has weight " << u.weight.to_string() << "\n";
  emit(o, out, os.str());
  return 2;
}

int cmd_enumerate(const Options& o) {
  const auto f = load_graph_file(o.file);
  require_legal(f);
  const auto r = bfs_enumerate(generalized_generators(f.graph, f.weights, coefficients(o, f.graph)), o.budget);
  std::ostringstream os;
  if (r.closed)
    os << "group order " << r.size << "\n";
  else
    os << "budget exhausted after " << r.size << " elements\n";
  os << "growth";
  for (auto g : r.growth) os << " " << g;
  os << "\n";
  emit(o, enumeration_to_json(r), os.str());
  return 0;
}

int cmd_generators(const Options& o) {
  const auto f = load_graph_file(o.file);
  require_legal(f);
  const auto gens = generalized_generators(f.graph, f.weights, coefficients(o, f.graph));
  json out = json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.push_back(matrix_to_json(gens[i]));
    os << "omega_" << i + 1 << " =\n" << format_matrix(gens[i]) << "\n";
  }
  const auto rel = verify_coxeter_relations(gens, f.graph);
  os << "relations: " << rel.relations_checked << " checked, " << rel.failures.size() << " failed\n";
  emit(o, {{"generators", out}, {"relations_ok", rel.ok()}}, os.str());
  return 0;
}

// "fire 1 / fire 2 / 1; undo" -> commands
std::vector<std::string> split_script(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + "/") {
    if (c == '/' || c == ';' || c == '\n' || c == ',') {
      std::istringstream is(cur);
      std::string word, rest;
      while (is >> word) rest += (rest.empty() ? "" : " ") + word;
      if (!rest.empty()) out.push_back(rest);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

struct PlayState {
  const NumbersGame& game;
  Position start;
  Word word;
  PlayRecord record;
};

// returns an error message, empty on success
std::string apply_command(PlayState& st, const std::string& cmd) {
  std::istringstream is(cmd);
  std::string head;
  is >> head;
  if (head == "undo") {
    if (!st.word.empty()) {
      st.word.pop_back();
      st.record.moves.pop_back();
      st.record.positions.pop_back();
    }
    return "";
  }
  if (head == "reset") {
    st.word.clear();
    st.record = PlayRecord{st.start, {}, {}};
    return "";
  }
  std::string num = head;
  if (head == "fire" && !(is >> num)) return "fire needs a vertex";
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(num, &used);
  } catch (const std::exception&) {
    return "unknown command '" + cmd + "'";
  }
  if (used != num.size()) return "unknown command '" + cmd + "'";
  const int n = st.game.graph().vertex_count();
  if (v < 1 || v > n) return "invalid vertex " + num + " (expected 1.." + std::to_string(n) + ")";
  const Position& p = st.record.final_position();
  st.record.moves.push_back({static_cast<Vertex>(v - 1), st.game.move_class(p, static_cast<Vertex>(v - 1))});
  st.record.positions.push_back(st.game.fire(p, static_cast<Vertex>(v - 1)));
  st.word.push_back(static_cast<Vertex>(v - 1));
  return "";
}

json play_summary(const PlayState& st) {
  json j = play_to_json(st.record);
  j["word"] = vertices_json(st.word);
  j["descent"] = vertices_json(st.game.descent_set(st.word));
  j["reduced"] = st.game.is_reduced(st.word);
  return j;
}

std::string play_text(const PlayState& st) {
  std::ostringstream os;
  os << format_play(st.record);
  os << "final " << format_position(st.record.final_position()) << "\n";
  // descent of the group word, read from the unit-equivalent start
  os << "descent " << vertices_1based(st.game.descent_set(st.word)) << "\n";
  os << "reduced " << (st.game.is_reduced(st.word) ? "true" : "false") << "\n";
  return os.str();
}

int cmd_play(const Options& o) {
  const auto f = load_graph_file(o.file);
  const auto setup = setup_game(f, o.asymmetric_k);
  if (!setup.game) {
    std::string msg = "generalized numbers game refused:";
    for (const auto& v : setup.check.violations) msg += "\n  " + v;
    throw ValidationFailure(msg);
  }
  PlayState st{*setup.game, f.start.value_or(setup.game->unit_start()), {}, {}};
  st.record.start = st.start;
  if (o.interactive) {
    std::cout << "commands: fire N, N, undo, reset, show, quit\n" << format_position(st.start) << "\n";
    for (std::string line; std::cout << "> " << std::flush, std::getline(std::cin, line);) {
      if (line == "quit" || line == "exit") break;
      if (line == "show") {
        std::cout << play_text(st);
        continue;
      }
      for (const auto& cmd : split_script(line)) {
        const auto err = apply_command(st, cmd);
        if (!err.empty()) {
          std::cout << "error: " << err << "\n";
          break;
        }
      }
      const auto& p = st.record.final_position();
      std::cout << format_position(p);
      if (!st.record.moves.empty()) std::cout << "  [" << to_string(st.record.moves.back().cls) << "]";
      std::cout << "  reduced=" << (st.game.is_reduced(st.word) ? "true" : "false") << "\n";
    }
    std::cout << play_text(st);
    return 0;
  }
  for (const auto& cmd : split_script(o.script)) {
    const auto err = apply_command(st, cmd);
    if (!err.empty()) throw ValidationFailure(err);
  }
  emit(o, play_summary(st), play_text(st));
  return 0;
}

std::vector<long> parse_ints(const std::string& s) {
  std::vector<long> out;
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream is(t);
  for (long x; is >> x;) out.push_back(x);
  if (!is.eof()) throw ValidationFailure("expected integers, got '" + s + "'");
  return out;
}

int cmd_imo(const Options& o) {
  if (!o.start.empty()) {
    const auto start = parse_ints(o.start);
    long sum = 0;
    for (long x : start) sum += x;
    if (start.size() != 5 || sum <= 0) throw ValidationFailure("need 5 integers with positive sum");
    const auto run = imo_pentagon_run(start, o.budget);
    json j = play_to_json(run.record);
    j["terminated"] = run.terminated;
    j["steps"] = run.record.moves.size();
    std::ostringstream os;
    os << format_play(run.record) << (run.terminated ? "terminated" : "budget exhausted") << " after "
       << run.record.moves.size() << " firings\n";
    emit(o, j, os.str());
    return 0;
  }
  std::mt19937 rng(o.seed);
  std::uniform_int_distribution<long> dist(-9, 9);
  std::map<std::size_t, std::size_t> histogram;
  std::size_t unterminated = 0, longest = 0;
  std::vector<long> worst;
  for (std::size_t k = 0; k < o.count; ++k) {
    std::vector<long> s(5);
    long sum = 0;
    do {
      sum = 0;
      for (auto& x : s) sum += (x = dist(rng));
    } while (sum <= 0);
    const auto run = imo_pentagon_run(s, o.budget);
    if (!run.terminated) ++unterminated;
    const auto steps = run.record.moves.size();
    ++histogram[steps];
    if (steps >= longest) {
      longest = steps;
      worst = s;
    }
  }
  json j{{"seed", o.seed}, {"starts", o.count}, {"budget", o.budget},
         {"unterminated", unterminated}, {"max_steps", longest}, {"slowest_start", worst}};
  j["histogram"] = json::array();
  std::ostringstream os;
  os << "seed " << o.seed << ", " << o.count << " starts in [-9,9]^5 with positive sum\n";
  os << std::setw(8) << "steps" << std::setw(8) << "starts" << "\n";
  for (const auto& [steps, n] : histogram) {
    j["histogram"].push_back({{"steps", steps}, {"starts", n}});
    os << std::setw(8) << steps << std::setw(8) << n << "\n";
  }
  os << "max " << longest << " firings";
  if (!worst.empty()) {
    os << " from (";
    for (std::size_t k = 0; k < worst.size(); ++k) os << (k ? "," : "") << worst[k];
    os << ")";
  }
  os << "\n" << unterminated << " runs hit the budget of " << o.budget << "\n";
  emit(o, j, os.str());
  return unterminated == 0 ? 0 : 2;
}

int cmd_affine(const Options& o) {
  const auto a = parse_scalar(o.a);
  if (o.n < 3) throw ValidationFailure("n must be at least 3");
  AffineIsoReport r;
  try {
    r = verify_affine_iso(o.n, a, o.bound);
  } catch (const std::domain_error& e) {
    throw ValidationFailure(e.what());
  }
  std::ostringstream os;
  os << "n=" << r.n << " a=" << a.to_string() << " words up to length " << r.max_length << ": " << r.words_checked
     << " checked\n";
  auto row = [&](const char* name, const std::vector<std::size_t>& g) {
    os << std::left << std::setw(10) << name;
    for (auto x : g) os << " " << x;
    os << "\n";
  };
  row("matrix", r.matrix_growth);
  row("affine", r.affine_growth);
  row("standard", r.standard_growth);
  os << (r.ok() ? "all three agree\n" : "DISAGREEMENT\n");
  for (const auto& f : r.failures) os << "  " << f << "\n";
  emit(o, affine_report_to_json(r), os.str());
  return r.ok() ? 0 : 2;
}

int cmd_presets(const Options& o) {
  if (!o.file.empty()) {
    const auto t = preset_text(o.file);
    if (!t) throw ValidationFailure("unknown preset '" + o.file + "'");
    emit(o, graph_to_json(parse_graph(*t)), *t);
    return 0;
  }
  json j = json::array();
  std::ostringstream os;
  for (const auto& name : preset_names()) {
    const auto g = parse_graph(*preset_text(name));
    j.push_back({{"name", name}, {"title", g.name}});
    os << std::left << std::setw(20) << name << g.name << "\n";
  }
  emit(o, j, os.str());
  return 0;
}

int run_guarded(const std::function<int()>& f) {
  try {
    return f();
  } catch (const FileParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationFailure& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Coxeter graphs: faithfulness, enumeration, numbers game"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--asymmetric-k", o.asymmetric_k, "integral asymmetric coefficients (2,1) and (3,1) for m = 4, 6");

  std::map<CLI::App*, std::function<int()>> actions;
  auto file_cmd = [&](const char* name, const char* help, std::function<int()> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "graph file or preset name")->required();
    actions[sub] = std::move(fn);
    return sub;
  };
  file_cmd("validate", "check legality and the generalized-game conditions", [&] { return cmd_validate(o); });
  file_cmd("classify", "faithfulness verdict with certificate", [&] { return cmd_classify(o); });
  file_cmd("gauge", "balance certificate and gauge matrix J", [&] { return cmd_gauge(o); });
  file_cmd("enumerate", "breadth-first enumeration of the image group", [&] { return cmd_enumerate(o); })
      ->add_option("--budget", o.budget, "maximum number of elements");
  file_cmd("generators", "print the generator matrices", [&] { return cmd_generators(o); });

  auto* play = file_cmd("play", "play the numbers game", [&] { return cmd_play(o); });
  play->add_option("--script", o.script, "moves, e.g. \"fire 1 / fire 2 / fire 1\"");
  play->add_flag("--interactive", o.interactive, "read commands from standard input");

  auto* imo = app.add_subcommand("imo", "pentagon game termination runs");
  imo->add_option("--seed", o.seed, "random seed");
  imo->add_option("--count", o.count, "number of random starts");
  imo->add_option("--budget", o.budget, "firings allowed per run");
  imo->add_option("--start", o.start, "a single start, e.g. \"-1,2,2,2,2\"");
  actions[imo] = [&] { return cmd_imo(o); };

  auto* affine = app.add_subcommand("affine", "truncated check of the affine permutation model");
  affine->add_option("--n", o.n, "cycle length");
  affine->add_option("--a", o.a, "cycle weight (infinite order)");
  affine->add_option("--bound", o.bound, "maximum word length");
  actions[affine] = [&] { return cmd_affine(o); };

  auto* presets = app.add_subcommand("presets", "list bundled examples, or print one");
  presets->add_option("name", o.file, "preset to print");
  actions[presets] = [&] { return cmd_presets(o); };

  auto* serve_cmd = app.add_subcommand("serve", "JSON-over-HTTP session service");
  serve_cmd->add_option("--port", o.port, "port");
  serve_cmd->add_option("--host", o.host, "bind address (localhost by default)");
  actions[serve_cmd] = [&] {
    SessionService service;
    return wcg::serve(service, o.host, o.port);
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (auto* sub : app.get_subcommands())
    if (auto it = actions.find(sub); it != actions.end()) return run_guarded(it->second);
  return 1;
}
