#include "mementoscope/fetch/http.hpp"

#include "mementoscope/url.hpp"

namespace mementoscope {

bool is_redirect_status(int status) {
  return status == 301 || status == 302 || status == 303 || status == 307 || status == 308;
}

FollowedExchange send_following_redirects(HttpTransport& transport, HttpRequest request,
                                          int redirect_limit) {
  FollowedExchange out;
  out.final_url = request.url;
  for (;;) {
    const auto url = parse_url(request.url);
    if (!url || !url->is_http()) {
      out.exchange = Exchange::fail(FetchError::kUnsupportedScheme,
                                    "cannot fetch '" + request.url + "'");
      return out;
    }
    out.exchange = transport.send(request);
    out.final_url = request.url;
    if (!out.exchange.response || !is_redirect_status(out.exchange.response->status)) return out;

    const auto location = find_header(out.exchange.response->headers, "Location");
    if (!location) return out;
    const auto next = resolve_url(request.url, *location);
    if (!next) {
      out.exchange = Exchange::fail(FetchError::kNetworkError,
                                    "unusable Location '" + *location + "'");
      return out;
    }
    if (out.redirects >= redirect_limit) {
      out.exchange = Exchange::fail(
          FetchError::kTooManyRedirects,
          "more than " + std::to_string(redirect_limit) + " redirects from " + out.final_url);
      return out;
    }
    ++out.redirects;
    const int status = out.exchange.response->status;
    if (status == 303 || ((status == 301 || status == 302) && request.method == "POST")) {
      request.method = "GET";
      request.body.clear();
    }
    // Drop the fragment; it is never sent on the wire.
    request.url = parse_url(*next)->without_fragment();
  }
}

}  // namespace mementoscope
