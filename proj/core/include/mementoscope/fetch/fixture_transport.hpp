#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mementoscope/fetch/http.hpp"

namespace mementoscope {

/// One recorded exchange.
///
/// On disk (`*.http`), newline-delimited sections:
///
///     # optional comment lines
///     GET https://example.org/page.html
///     HTTP/1.1 200 OK
///     Content-Type: text/html
///     Memento-Datetime: Tue, 05 Mar 2019 09:38:34 GMT
///
///     <body bytes to end of file>
///
/// The first line is the request method and absolute URL, the second the
/// status line. Header lines follow verbatim up to the first empty line;
/// everything after it is the body. A status line of the form
/// `ERROR <TIMEOUT|NETWORK_ERROR|...> [message]` replays a transport failure.
/// CRLF line endings are accepted.
struct Fixture {
  std::string method;
  std::string url;
  Exchange exchange;
  std::string source;  // file path, for diagnostics
};

Fixture parse_fixture(std::string_view text, std::string source = {});
std::string serialize_fixture(const Fixture& f);

/// Replays recorded exchanges keyed by (method, URL).
///
/// A HEAD request without its own recording is answered from the GET
/// recording with the body dropped. Requests with no recording fail with
/// NETWORK_ERROR. Every request is logged and available via requests().
class FixtureTransport final : public HttpTransport {
 public:
  FixtureTransport() = default;
  // Loads every `*.http` file under `dir` (recursively).
  explicit FixtureTransport(const std::filesystem::path& dir) { load_directory(dir); }

  void load_directory(const std::filesystem::path& dir);

  void add(Fixture f);
  // Convenience for tests.
  void add_response(std::string method, std::string url, int status, HeaderList headers,
                    std::string body = {});
  void add_failure(std::string method, std::string url, FetchError error);

  Exchange send(const HttpRequest& request) override;

  std::vector<HttpRequest> requests() const;
  std::size_t size() const { return fixtures_.size(); }
  // Recorded exchange for (method, url), HEAD falling back to GET.
  const Fixture* find(std::string_view method, std::string_view url) const;

 private:
  std::map<std::pair<std::string, std::string>, Fixture> fixtures_;
  mutable std::mutex log_mutex_;
  std::vector<HttpRequest> log_;
};

}  // namespace mementoscope
