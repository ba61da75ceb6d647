#include "wcg/service.hpp"

#include <random>
#include <sstream>

#include "wcg/classifier.hpp"

namespace wcg {

namespace {

nlohmann::json check_to_json(const GeneralizedCheck& c) {
  return {{"ok", c.ok()},
          {"conditions", {c.condition1, c.condition2, c.condition3}},
          {"violations", c.violations}};
}

nlohmann::json error(const std::string& msg) { return {{"error", msg}}; }

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::stringstream ss(path.substr(0, path.find('?')));
  for (std::string p; std::getline(ss, p, '/');)
    if (!p.empty()) parts.push_back(p);
  return parts;
}

}  // namespace

Session::Session(GraphFile file, bool asymmetric_k) : file_(std::move(file)), asymmetric_k_(asymmetric_k) {
  setup_ = setup_game(file_, asymmetric_k_);
  if (file_.start) {
    start_ = *file_.start;
  } else if (setup_.game) {
    start_ = setup_.game->unit_start();
  } else {
    start_ = Position::Constant(file_.graph.vertex_count(), Cyclotomic(1));
  }
  record_.start = start_;
  try {
    verdict_ = verdict_to_json(classify(file_.graph, file_.weights));
  } catch (const std::exception& e) {
    verdict_ = {{"verdict", "error"}, {"message", e.what()}};
  }
}

int Session::fire(Vertex v, std::string& err) {
  std::unique_lock lock(mutex_);
  if (!setup_.game) {
    err = "generalized weight validation failed at session creation";
    return 409;
  }
  if (v < 0 || v >= file_.graph.vertex_count()) {
    err = "vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(file_.graph.vertex_count());
    return 422;
  }
  const Position& p = record_.final_position();
  record_.moves.push_back({v, setup_.game->move_class(p, v)});
  record_.positions.push_back(setup_.game->fire(p, v));
  word_.push_back(v);
  return 200;
}

void Session::undo() {
  std::unique_lock lock(mutex_);
  if (word_.empty()) return;
  word_.pop_back();
  record_.moves.pop_back();
  record_.positions.pop_back();
}

void Session::reset() {
  std::unique_lock lock(mutex_);
  word_.clear();
  record_ = PlayRecord{};
  record_.start = start_;
}

Word Session::word() const {
  std::shared_lock lock(mutex_);
  return word_;
}

nlohmann::json Session::state() const {
  std::shared_lock lock(mutex_);
  return state_locked();
}

nlohmann::json Session::state_locked() const {
  const int n = file_.graph.vertex_count();
  const Position& p = record_.final_position();
  nlohmann::json s;
  s["name"] = file_.name;
  s["graph"] = graph_to_json(file_);
  s["mode"] = setup_.generalized ? "generalized" : "classical";
  s["asymmetric_k"] = asymmetric_k_;
  s["playable"] = setup_.game.has_value();
  if (setup_.generalized) s["generalized_check"] = check_to_json(setup_.check);
  if (setup_.game && setup_.game->potentials()) {
    s["potentials"] = nlohmann::json::array();
    for (const auto& x : *setup_.game->potentials()) s["potentials"].push_back(scalar_to_json(x));
  }
  s["start"] = position_to_json(start_);
  s["position"] = position_to_json(p);
  s["classes"] = nlohmann::json::array();
  s["descent"] = nlohmann::json::array();
  for (Vertex v = 0; v < n; ++v) {
    const MoveClass c = setup_.game ? setup_.game->move_class(p, v) : move_class(p, v);
    s["classes"].push_back(to_string(c));
    if (c == MoveClass::negative || c == MoveClass::pseudo_negative) s["descent"].push_back(v + 1);
  }
  s["word"] = nlohmann::json::array();
  for (Vertex v : word_) s["word"].push_back(v + 1);
  s["moves"] = nlohmann::json::array();
  for (const auto& m : record_.moves) s["moves"].push_back({{"vertex", m.vertex + 1}, {"class", to_string(m.cls)}});
  s["reduced"] = setup_.game ? nlohmann::json(setup_.game->is_reduced(word_)) : nlohmann::json(nullptr);
  s["verdict"] = verdict_;
  return s;
}

std::shared_ptr<Session> SessionService::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

Response SessionService::create(const std::string& body, bool asymmetric_k) {
  GraphFile file;
  try {
    // {"preset": name} picks a bundled example
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '{') {
      const auto j = nlohmann::json::parse(body, nullptr, false);
      if (j.is_object() && j.contains("preset")) {
        const auto text = j["preset"].is_string() ? preset_text(j["preset"].get<std::string>()) : std::nullopt;
        if (!text) return {404, error("unknown preset " + j["preset"].dump())};
        file = parse_graph(*text);
      } else {
        file = parse_graph(body);
      }
    } else {
      file = parse_graph(body);
    }
  } catch (const FileParseError& e) {
    return {422, error(e.what())};
  }
  auto session = std::make_shared<Session>(std::move(file), asymmetric_k);
  std::string id;
  {
    std::lock_guard lock(mutex_);
    static thread_local std::mt19937_64 rng(std::random_device{}());
    std::ostringstream os;
    os << std::hex << rng() << "-" << next_++;
    id = os.str();
    sessions_[id] = session;
  }
  return {200, {{"id", id}, {"state", session->state()}}};
}

Response SessionService::handle(const std::string& method, const std::string& path, const std::string& body,
                                const std::map<std::string, std::string>& query) {
  const auto parts = split_path(path);
  if (parts.size() == 1 && parts[0] == "presets") {
    if (method != "GET") return {405, error("method not allowed")};
    nlohmann::json list = nlohmann::json::array();
    for (const auto& name : preset_names()) {
      const auto text = *preset_text(name);
      const auto g = parse_graph(text);
      list.push_back({{"name", name}, {"title", g.name}, {"text", text}, {"graph", graph_to_json(g)}});
    }
    return {200, {{"presets", list}}};
  }
  if (parts.empty() || parts[0] != "session") return {404, error("no such endpoint")};
  if (parts.size() == 1) {
    if (method != "POST") return {405, error("method not allowed")};
    auto it = query.find("asymmetric_k");
    return create(body, it != query.end() && it->second != "0" && it->second != "false");
  }
  auto session = find(parts[1]);
  if (!session) return {404, error("unknown session " + parts[1])};
  auto reply = [&](int status = 200) { return Response{status, {{"id", parts[1]}, {"state", session->state()}}}; };
  if (parts.size() == 2) {
    if (method != "GET") return {405, error("method not allowed")};
    return reply();
  }
  if (parts.size() != 3) return {404, error("no such endpoint")};
  if (method != "POST") return {405, error("method not allowed")};
  const std::string& action = parts[2];
  if (action == "fire") {
    const auto j = nlohmann::json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("vertex") || !j["vertex"].is_number_integer())
      return {422, error("body must be {\"vertex\": <1-based index>}")};
    std::string err;
    const int status = session->fire(static_cast<Vertex>(j["vertex"].get<long>() - 1), err);
    if (status != 200) return {status, error(err)};
    return reply();
  }
  if (action == "undo") {
    session->undo();
    return reply();
  }
  if (action == "reset") {
    session->reset();
    return reply();
  }
  return {404, error("no such endpoint")};
}

}  // namespace wcg
