#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mementoscope {

enum class RedirectStyle { kNearestDatetime, kNone };

enum class SubmitMethod {
  kGetAppend,  // GET <endpoint><url>
  kPostForm,   // POST <endpoint> with body url=<url>
};

struct SubmitEndpoint {
  SubmitMethod method = SubmitMethod::kGetAppend;
  std::string url;

  friend bool operator==(const SubmitEndpoint&, const SubmitEndpoint&) = default;
};

struct KnownArchive {
  std::string id;
  std::string display_name;
  std::vector<std::string> host_patterns;
  // Archive presents captures inside an iframe of its own chrome.
  bool iframe_display = false;
  RedirectStyle redirect_style = RedirectStyle::kNone;
  // Prefix for `<replay_base>/<datestring>/<url>` links.
  std::optional<std::string> replay_base;
  std::optional<SubmitEndpoint> submit;

  bool matches_host(std::string_view host) const;

  friend bool operator==(const KnownArchive&, const KnownArchive&) = default;
};

std::string_view redirect_style_name(RedirectStyle s);
std::optional<RedirectStyle> redirect_style_from_name(std::string_view name);
std::string_view submit_method_name(SubmitMethod m);
std::optional<SubmitMethod> submit_method_from_name(std::string_view name);

namespace archive_ids {
inline constexpr std::string_view kInternetArchive = "internet_archive";
inline constexpr std::string_view kArchiveToday = "archive_today";
inline constexpr std::string_view kMegalodon = "megalodon";
inline constexpr std::string_view kTrove = "trove";
inline constexpr std::string_view kPermaCc = "perma_cc";
}  // namespace archive_ids

// The archives recognised out of the box: sixteen replay archives plus
// Megalodon.jp as a submission target.
std::vector<KnownArchive> default_known_archives();

const KnownArchive* find_archive_by_id(const std::vector<KnownArchive>& archives,
                                       std::string_view id);
const KnownArchive* find_archive_for_url(const std::vector<KnownArchive>& archives,
                                         std::string_view url);

// Empty optional when the list is valid; otherwise the first problem found.
std::optional<std::string> validate_archives(const std::vector<KnownArchive>& archives);

}  // namespace mementoscope
