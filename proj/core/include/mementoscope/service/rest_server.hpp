#pragma once

#include <memory>
#include <string>

#include "mementoscope/service/app.hpp"

namespace mementoscope {

/// JSON API over an App.
///
///   POST /api/analyze            {url, max_depth?, resources?}
///   GET  /api/analyses           GET /api/analyses/{id}
///   GET  /api/bookmarks          POST /api/bookmarks {url, title?, archive, offset_seconds?}
///   GET  /api/jobs               GET /api/jobs/{id}
///   GET  /api/config/archives
///
/// Errors come back as {"error": {"code": ..., "message": ...}} with 400 for
/// malformed requests, 404 for unknown ids and 502 when the page to analyze
/// cannot be fetched.
class RestServer {
 public:
  explicit RestServer(App& app);
  ~RestServer();

  RestServer(const RestServer&) = delete;
  RestServer& operator=(const RestServer&) = delete;

  // Returns the bound port (useful with port 0), or -1.
  int bind(const std::string& host, int port);
  // Serves until stop(); call after bind().
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mementoscope
