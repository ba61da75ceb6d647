#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "wcg/graph.hpp"
#include "wcg/numbers_game.hpp"

namespace wcg {

/// A graph file: labels, directed weights, and optional metadata.
struct GraphFile {
  std::string name;
  CoxeterGraph graph;
  WeightFunction weights;
  std::optional<Position> start;
};

class FileParseError : public std::runtime_error {
 public:
  FileParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Line format:
///   vertices N
///   edge i j [m=<int|inf>] [w=<literal>]   f(i,j) = w, f(j,i) = 1/w
///   arc i j w=<literal>                    f(i,j) only, no derived reverse;
///                                          an edge line without w= then
///                                          takes its weights from arcs alone
///   start x1 ... xN
///   name <text>
/// Vertices are 1-based, "#" starts a comment.
GraphFile parse_graph_text(const std::string& text);
GraphFile parse_graph_json(const nlohmann::json& j);
/// JSON if the first non-blank character is '{', text otherwise.
GraphFile parse_graph(const std::string& content);
GraphFile load_graph_file(const std::string& path);

std::string graph_to_text(const GraphFile& g);
nlohmann::json graph_to_json(const GraphFile& g);

/// True when every weight is 1, so the game is the classical one.
bool trivially_weighted(const GraphFile& g);

/// The numbers game a file describes. `game` is empty when the generalized
/// conditions fail; `check` then says why.
struct GameSetup {
  std::optional<NumbersGame> game;
  bool generalized = false;
  GeneralizedCheck check;
};

GameSetup setup_game(const GraphFile& g, bool asymmetric_k);

/// Bundled examples, by name.
std::vector<std::string> preset_names();
std::optional<std::string> preset_text(const std::string& name);

}  // namespace wcg
