#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "json.hpp"
#include "wcg/io.hpp"

namespace wcg {

/// One playground session: a graph, its game, and the moves played so far.
/// All mutation goes through fire/undo/reset; state is a function of the move
/// list, so replaying the moves reproduces it exactly.
class Session {
 public:
  Session(GraphFile file, bool asymmetric_k);

  /// Status codes: 200 ok, 409 refused game, 422 bad vertex.
  int fire(Vertex v, std::string& error);
  void undo();
  void reset();
  nlohmann::json state() const;
  Word word() const;

 private:
  nlohmann::json state_locked() const;

  mutable std::shared_mutex mutex_;
  GraphFile file_;
  bool asymmetric_k_;
  GameSetup setup_;
  Position start_;
  PlayRecord record_;
  Word word_;
  nlohmann::json verdict_;
};

struct Response {
  int status = 200;
  nlohmann::json body;
};

/// Routes requests to sessions. Transport-free so it can be tested directly.
class SessionService {
 public:
  Response handle(const std::string& method, const std::string& path, const std::string& body,
                  const std::map<std::string, std::string>& query = {});

  std::shared_ptr<Session> find(const std::string& id) const;

 private:
  Response create(const std::string& body, bool asymmetric_k);

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  unsigned long next_ = 1;
};

/// Blocks serving HTTP until the process is stopped.
int serve(SessionService& service, const std::string& host, int port);

}  // namespace wcg
