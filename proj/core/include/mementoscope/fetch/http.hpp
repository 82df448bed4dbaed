#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "mementoscope/core/frame_tree.hpp"
#include "mementoscope/core/headers.hpp"

namespace mementoscope {

struct HttpRequest {
  std::string method = "GET";
  std::string url;
  HeaderList headers;
  std::string body;
  std::chrono::milliseconds timeout{20000};
};

struct HttpResponse {
  int status = 0;
  std::string reason;
  HeaderList headers;
  std::string body;
};

// Outcome of one request/response exchange. Exactly one of `response` and
// `error` is set.
struct Exchange {
  std::optional<HttpResponse> response;
  std::optional<FetchError> error;
  std::string message;

  static Exchange ok(HttpResponse r) { return {std::move(r), std::nullopt, {}}; }
  static Exchange fail(FetchError e, std::string why) { return {std::nullopt, e, std::move(why)}; }
};

// A single-hop HTTP client. Implementations never follow redirects and must
// be safe to call from several threads at once.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual Exchange send(const HttpRequest& request) = 0;
};

struct FollowedExchange {
  Exchange exchange;
  std::string final_url;
  int redirects = 0;
};

bool is_redirect_status(int status);

// Sends `request` and follows Location redirects up to `redirect_limit`
// hops. A 303, or a 301/302 answering a POST, continues as GET.
FollowedExchange send_following_redirects(HttpTransport& transport, HttpRequest request,
                                          int redirect_limit);

}  // namespace mementoscope
