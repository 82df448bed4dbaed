#include "mementoscope/archive/archive_url.hpp"

#include <cctype>

#include "mementoscope/error.hpp"
#include "mementoscope/url.hpp"

namespace mementoscope {

std::string construct_archive_url(const KnownArchive& archive, std::string_view original_url,
                                  Instant t, int offset_seconds) {
  if (archive.redirect_style != RedirectStyle::kNearestDatetime || !archive.replay_base) {
    throw Error(ErrorCode::kNoRedirectSupport,
                archive.display_name + " does not redirect to the nearest datetime");
  }
  if (offset_seconds < 0) {
    throw Error(ErrorCode::kInvalidArgument, "offset_seconds must be non-negative");
  }
  std::string base = *archive.replay_base;
  while (!base.empty() && base.back() == '/') base.pop_back();
  return base + "/" + to_datestring14(t + std::chrono::seconds(offset_seconds)) + "/" +
         std::string(original_url);
}

std::string archive_node_title(const KnownArchive& archive, std::string_view original_url,
                               Instant t) {
  std::string host = url_host(original_url);
  if (host.empty()) host = std::string(original_url);
  return archive.display_name + " " + host + " " + format_ymd(t);
}

std::optional<std::string> datestring_in_url(std::string_view memento_url) {
  // First path segment of exactly 14 digits (optionally with a replay
  // modifier such as "id_" appended, which is ignored).
  std::size_t pos = memento_url.find("://");
  pos = pos == std::string_view::npos ? 0 : memento_url.find('/', pos + 3);
  while (pos != std::string_view::npos && pos < memento_url.size()) {
    const std::size_t start = pos + 1;
    const std::size_t end = memento_url.find('/', start);
    const std::string_view seg = memento_url.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::size_t digits = 0;
    while (digits < seg.size() && std::isdigit(static_cast<unsigned char>(seg[digits]))) ++digits;
    if (digits == 14 && (seg.size() == 14 || std::isalpha(static_cast<unsigned char>(seg[14])))) {
      return std::string(seg.substr(0, 14));
    }
    pos = end;
  }
  return std::nullopt;
}

}  // namespace mementoscope
