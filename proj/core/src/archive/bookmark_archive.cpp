#include "mementoscope/archive/bookmark_archive.hpp"

#include "mementoscope/archive/archive_url.hpp"
#include "mementoscope/error.hpp"

namespace mementoscope {

std::optional<BookmarkNodeType> archive_choice_from_name(std::string_view name) {
  if (name == "none") return BookmarkNodeType::kNoArchive;
  if (name == "internet_archive") return BookmarkNodeType::kInternetArchive;
  if (name == "archive_today") return BookmarkNodeType::kArchiveToday;
  if (name == "megalodon") return BookmarkNodeType::kMegalodon;
  return std::nullopt;
}

std::string_view archive_choice_name(BookmarkNodeType choice) {
  switch (choice) {
    case BookmarkNodeType::kInternetArchive: return "internet_archive";
    case BookmarkNodeType::kArchiveToday: return "archive_today";
    case BookmarkNodeType::kMegalodon: return "megalodon";
    default: return "none";
  }
}

std::string_view archive_id_for_choice(BookmarkNodeType choice) {
  switch (choice) {
    case BookmarkNodeType::kInternetArchive: return archive_ids::kInternetArchive;
    case BookmarkNodeType::kArchiveToday: return archive_ids::kArchiveToday;
    case BookmarkNodeType::kMegalodon: return archive_ids::kMegalodon;
    default: return {};
  }
}

BookmarkMutation bookmark_with_archive(BookmarkStore& store,
                                       const std::vector<KnownArchive>& archives,
                                       std::string_view url,
                                       const std::optional<std::string>& title,
                                       BookmarkNodeType choice, Instant now, int offset_seconds) {
  if (choice != BookmarkNodeType::kNoArchive && archive_id_for_choice(choice).empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(bookmark_node_type_name(choice)) + " is not an archive choice");
  }
  if (offset_seconds < 0) throw Error(ErrorCode::kInvalidArgument, "offset must be non-negative");

  const KnownArchive* archive = nullptr;
  if (choice != BookmarkNodeType::kNoArchive) {
    archive = find_archive_by_id(archives, archive_id_for_choice(choice));
    if (!archive) {
      throw Error(ErrorCode::kInvalidConfig,
                  "archive '" + std::string(archive_id_for_choice(choice)) + "' is not configured");
    }
  }

  BookmarkMutation out;
  const std::string live_url(url);
  if (const BookmarkNode* existing = store.original_url_node(live_url)) {
    out.live_node = existing->id;
  } else {
    out.live_node = store.add_url(store.permanent(BookmarkNodeType::kBookmarkBar).id,
                                  title.value_or(live_url), live_url, now);
    out.created_live_node = true;
  }
  if (!archive) return out;
  out.archive_id = archive->id;

  const BookmarkNode* parent = store.parent_of(out.live_node);
  if (!parent) throw Error(ErrorCode::kStoreConflict, "bookmark lost its parent");
  if (parent->type == BookmarkNodeType::kFolder && parent->title == live_url) {
    out.folder = parent->id;
  } else {
    out.folder = store.add_folder(parent->id, live_url, now);
    out.created_folder = true;
    store.move(out.live_node, *out.folder);
  }

  out.archive_url = archive->redirect_style == RedirectStyle::kNearestDatetime
                        ? construct_archive_url(*archive, live_url, now, offset_seconds)
                        : live_url;
  out.archive_node =
      store.add_url(*out.folder, archive_node_title(*archive, live_url, now), *out.archive_url, now);
  return out;
}

void apply_archive_result(BookmarkStore& store, const KnownArchive& archive,
                          BookmarkId archive_node, std::string_view original_url,
                          const std::string& memento_url, Instant completed_at) {
  const BookmarkNode* node = store.find(archive_node);
  if (!node || node->type != BookmarkNodeType::kUrl) {
    throw Error(ErrorCode::kStoreConflict,
                "archive node " + std::to_string(archive_node) + " no longer exists");
  }
  Instant captured = completed_at;
  if (auto ds = datestring_in_url(memento_url)) {
    try {
      captured = *from_datestring14(*ds).instant;
    } catch (const Error&) {
    }
  }
  store.set_url(archive_node, memento_url);
  store.set_title(archive_node, archive_node_title(archive, original_url, captured));
}

}  // namespace mementoscope
