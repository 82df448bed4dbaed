#include "mementoscope/fetch/live_transport.hpp"

#include <httplib.h>

#include "mementoscope/url.hpp"

namespace mementoscope {

Exchange LiveTransport::send(const HttpRequest& request) {
  const auto url = parse_url(request.url);
  if (!url || !url->is_http()) {
    return Exchange::fail(FetchError::kUnsupportedScheme, "cannot fetch '" + request.url + "'");
  }
  std::string origin = url->scheme + "://" + url->host;
  if (url->port) origin += ":" + std::to_string(*url->port);

  httplib::Client client(origin);
  client.set_follow_location(false);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(request.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(request.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  httplib::Request req;
  req.method = request.method;
  req.path = url->target();
  for (const auto& [k, v] : request.headers) req.headers.emplace(k, v);
  req.body = request.body;

  const auto started = std::chrono::steady_clock::now();
  auto result = client.send(req);
  if (!result) {
    const auto err = result.error();
    // A read that fails after the full timeout elapsed is a read timeout.
    const bool timed_out =
        err == httplib::Error::ConnectionTimeout ||
        (err == httplib::Error::Read &&
         std::chrono::steady_clock::now() - started >= request.timeout);
    const FetchError kind = timed_out ? FetchError::kTimeout : FetchError::kNetworkError;
    return Exchange::fail(kind, httplib::to_string(err));
  }
  HttpResponse out;
  out.status = result->status;
  out.reason = result->reason;
  for (const auto& [k, v] : result->headers) out.headers.emplace_back(k, v);
  out.body = std::move(result->body);
  return Exchange::ok(std::move(out));
}

}  // namespace mementoscope
