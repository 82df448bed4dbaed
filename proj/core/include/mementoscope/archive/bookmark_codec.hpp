#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "mementoscope/archive/bookmarks.hpp"

namespace mementoscope {

// JSON layout:
//   {"version": 3,
//    "roots": [{"id": 1, "guid": "...", "type": "BOOKMARK_BAR", "title": "...",
//               "created_at": "2020-03-04T15:00:00Z", "children": [...]}, ...]}
// URL nodes carry "url" and no "children".
nlohmann::json store_to_json(const BookmarkStore& store);
BookmarkStore store_from_json(const nlohmann::json& doc);

std::string encode_store(const BookmarkStore& store);
// Throws Error(kCorruptStore); the message carries the byte offset for
// syntax errors.
BookmarkStore decode_store(std::string_view text);

// A missing file yields a fresh store.
BookmarkStore load_store(const std::filesystem::path& path, Instant now = Instant{});
// Writes to a sibling temp file and renames over `path`.
void save_store(const BookmarkStore& store, const std::filesystem::path& path);

}  // namespace mementoscope
