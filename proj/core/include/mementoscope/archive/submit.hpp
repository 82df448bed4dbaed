#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "mementoscope/core/known_archive.hpp"
#include "mementoscope/fetch/http.hpp"

namespace mementoscope {

struct SubmitOptions {
  std::chrono::milliseconds timeout{std::chrono::minutes(5)};
  int redirect_limit = 10;
  std::string user_agent;
};

struct SubmissionResult {
  std::optional<std::string> memento_url;
  std::string error;  // set when memento_url is empty

  bool ok() const { return memento_url.has_value(); }
};

/// Asks `archive` to capture `url` now and reports the memento it created.
///
/// The memento URL is read from, in order: a Content-Location header, a
/// Refresh header, or the URL the submission redirected to.
SubmissionResult submit_capture(HttpTransport& transport, const KnownArchive& archive,
                                std::string_view url, const SubmitOptions& options);

}  // namespace mementoscope
