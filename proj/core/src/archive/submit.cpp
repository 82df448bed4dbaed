#include "mementoscope/archive/submit.hpp"

#include <cctype>

#include "mementoscope/url.hpp"

namespace mementoscope {
namespace {

// "0;url=https://archive.is/abc" -> "https://archive.is/abc"
std::optional<std::string> refresh_target(std::string_view value) {
  for (std::size_t i = 0; i + 4 <= value.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(value[i])) == 'u' &&
        std::tolower(static_cast<unsigned char>(value[i + 1])) == 'r' &&
        std::tolower(static_cast<unsigned char>(value[i + 2])) == 'l') {
      std::size_t j = i + 3;
      while (j < value.size() && value[j] == ' ') ++j;
      if (j < value.size() && value[j] == '=') {
        std::string_view target = value.substr(j + 1);
        while (!target.empty() && (target.front() == ' ' || target.front() == '\'' ||
                                   target.front() == '"')) {
          target.remove_prefix(1);
        }
        while (!target.empty() && (target.back() == ' ' || target.back() == '\'' ||
                                   target.back() == '"')) {
          target.remove_suffix(1);
        }
        if (!target.empty()) return std::string(target);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SubmissionResult submit_capture(HttpTransport& transport, const KnownArchive& archive,
                                std::string_view url, const SubmitOptions& options) {
  SubmissionResult out;
  if (!archive.submit) {
    out.error = "archive '" + archive.id + "' has no submission endpoint";
    return out;
  }
  HttpRequest request;
  request.timeout = options.timeout;
  if (!options.user_agent.empty()) request.headers.emplace_back("User-Agent", options.user_agent);
  if (archive.submit->method == SubmitMethod::kGetAppend) {
    request.method = "GET";
    request.url = archive.submit->url + std::string(url);
  } else {
    request.method = "POST";
    request.url = archive.submit->url;
    request.headers.emplace_back("Content-Type", "application/x-www-form-urlencoded");
    request.body = "url=" + form_urlencode(url);
  }
  const std::string submitted_to = request.url;

  FollowedExchange hop = send_following_redirects(transport, std::move(request), options.redirect_limit);
  if (!hop.exchange.response) {
    out.error = std::string(fetch_error_name(hop.exchange.error.value_or(FetchError::kNetworkError)));
    if (!hop.exchange.message.empty()) out.error += ": " + hop.exchange.message;
    return out;
  }
  const HttpResponse& response = *hop.exchange.response;
  if (response.status >= 400) {
    out.error = "HTTP " + std::to_string(response.status) + " from " + hop.final_url;
    return out;
  }
  if (auto location = find_header(response.headers, "Content-Location")) {
    if (auto resolved = resolve_url(hop.final_url, *location)) {
      out.memento_url = *resolved;
      return out;
    }
  }
  if (auto refresh = find_header(response.headers, "Refresh")) {
    if (auto target = refresh_target(*refresh)) {
      if (auto resolved = resolve_url(hop.final_url, *target)) {
        out.memento_url = *resolved;
        return out;
      }
    }
  }
  if (hop.redirects > 0 && hop.final_url != submitted_to) {
    out.memento_url = hop.final_url;
    return out;
  }
  out.error = "archive response did not name a memento";
  return out;
}

}  // namespace mementoscope
