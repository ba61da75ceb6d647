#include <iostream>

// before httplib: <resolv.h> defines a _res macro that clashes with Eigen
#include "wcg/service.hpp"

#include "httplib.h"

namespace wcg {

int serve(SessionService& service, const std::string& host, int port) {
  httplib::Server server;
  auto route = [&service](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query[k] = v;
    Response r;
    try {
      r = service.handle(req.method, req.path, req.body, query);
    } catch (const std::exception& e) {
      r = {500, {{"error", e.what()}}};
    }
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
    // the playground may be served from another local port
    res.set_header("Access-Control-Allow-Origin", "*");
  };
  server.Get(R"(/.*)", route);
  server.Post(R"(/.*)", route);
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  std::cerr << "listening on http://" << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "cannot bind " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace wcg
