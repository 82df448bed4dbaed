#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mementoscope/archive/bookmarks.hpp"
#include "mementoscope/core/known_archive.hpp"

namespace mementoscope {

// "none" | "internet_archive" | "archive_today" | "megalodon"
std::optional<BookmarkNodeType> archive_choice_from_name(std::string_view name);
std::string_view archive_choice_name(BookmarkNodeType choice);
// KnownArchive id behind an archive choice; empty for NO_ARCHIVE.
std::string_view archive_id_for_choice(BookmarkNodeType choice);

struct BookmarkMutation {
  BookmarkId live_node = 0;
  bool created_live_node = false;
  std::optional<BookmarkId> folder;
  bool created_folder = false;
  std::optional<BookmarkId> archive_node;
  // Initial URL of the archive node (nearest-datetime link or live URL).
  std::optional<std::string> archive_url;
  std::string archive_id;
};

/// Bookmark `url` and, unless `choice` is NO_ARCHIVE, add an archive node.
///
/// The plain bookmark is reused when one exists, otherwise created in the
/// bookmarks bar. Archiving groups the live node and its archive nodes in a
/// folder titled with the live URL; the folder is created only when the live
/// node is not already inside one. The archive node links to the archive's
/// nearest-datetime URL for `now + offset_seconds`, or to the live URL when
/// the archive has no such redirect. Submission is the caller's job.
BookmarkMutation bookmark_with_archive(BookmarkStore& store,
                                       const std::vector<KnownArchive>& archives,
                                       std::string_view url,
                                       const std::optional<std::string>& title,
                                       BookmarkNodeType choice, Instant now, int offset_seconds);

// Points an archive node at the archive-reported memento. Throws
// Error(kStoreConflict) if the node disappeared in the meantime.
void apply_archive_result(BookmarkStore& store, const KnownArchive& archive,
                          BookmarkId archive_node, std::string_view original_url,
                          const std::string& memento_url, Instant completed_at);

}  // namespace mementoscope
