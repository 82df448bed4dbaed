#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mementoscope/core/datetime.hpp"
#include "mementoscope/core/known_archive.hpp"

namespace mementoscope {

inline constexpr int kDefaultOffsetSeconds = 30;

/// `<replay_base>/<datestring of t + offset>/<original_url>`.
///
/// Archives that redirect a datestring to their nearest capture resolve this
/// to the memento closest to the requested instant. Throws
/// Error(kNoRedirectSupport) for archives without that behaviour and
/// Error(kInvalidArgument) for a negative offset.
std::string construct_archive_url(const KnownArchive& archive, std::string_view original_url,
                                  Instant t, int offset_seconds);

/// "Archive.today example.com 2020-03-04"
std::string archive_node_title(const KnownArchive& archive, std::string_view original_url,
                               Instant t);

// The 14-digit datestring embedded in a replay URL such as
// https://web.archive.org/web/20100412125057/http://www.mitre.org/.
std::optional<std::string> datestring_in_url(std::string_view memento_url);

}  // namespace mementoscope
