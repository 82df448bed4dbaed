#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mementoscope/core/datetime.hpp"

namespace mementoscope {

enum class BookmarkNodeType {
  kUrl,
  kFolder,
  kBookmarkBar,
  kNoArchive,
  kArchiveToday,
  kInternetArchive,
  kMegalodon,
  kOtherNode,
  kMobile,
};

inline constexpr std::array<BookmarkNodeType, 9> kAllBookmarkNodeTypes = {
    BookmarkNodeType::kUrl,          BookmarkNodeType::kFolder,
    BookmarkNodeType::kBookmarkBar,  BookmarkNodeType::kNoArchive,
    BookmarkNodeType::kArchiveToday, BookmarkNodeType::kInternetArchive,
    BookmarkNodeType::kMegalodon,    BookmarkNodeType::kOtherNode,
    BookmarkNodeType::kMobile,
};

// Permanent roots in the order they appear in a store.
inline constexpr std::array<BookmarkNodeType, 7> kPermanentNodeTypes = {
    BookmarkNodeType::kBookmarkBar,  BookmarkNodeType::kNoArchive,
    BookmarkNodeType::kArchiveToday, BookmarkNodeType::kInternetArchive,
    BookmarkNodeType::kMegalodon,    BookmarkNodeType::kOtherNode,
    BookmarkNodeType::kMobile,
};

std::string_view bookmark_node_type_name(BookmarkNodeType t);
std::optional<BookmarkNodeType> bookmark_node_type_from_name(std::string_view name);
bool is_permanent(BookmarkNodeType t);
// Folder-like: everything except URL nodes.
bool is_folder_like(BookmarkNodeType t);
std::string_view permanent_node_title(BookmarkNodeType t);

// Name-derived UUID (version 5) for a permanent node; identical on every
// install.
std::string permanent_node_guid(BookmarkNodeType t);
std::string random_guid();

using BookmarkId = std::uint64_t;

struct BookmarkNode {
  BookmarkId id = 0;
  std::string guid;
  BookmarkNodeType type = BookmarkNodeType::kUrl;
  std::string title;
  std::optional<std::string> url;
  std::vector<BookmarkNode> children;
  Instant created_at{};

  friend bool operator==(const BookmarkNode&, const BookmarkNode&) = default;
};

class BookmarkStore {
 public:
  // A store holding exactly the permanent roots.
  static BookmarkStore fresh(Instant now = Instant{});

  const std::vector<BookmarkNode>& roots() const { return roots_; }
  std::int64_t version() const { return version_; }
  bool dirty() const { return dirty_; }
  void mark_clean() { dirty_ = false; }
  BookmarkId next_id() const { return next_id_; }

  const BookmarkNode& permanent(BookmarkNodeType type) const;
  const BookmarkNode* find(BookmarkId id) const;
  const BookmarkNode* parent_of(BookmarkId id) const;
  // Earliest-created URL node pointing at `url`. Archive nodes that fall back
  // to the live URL are always younger than the bookmark they belong to.
  const BookmarkNode* original_url_node(std::string_view url) const;

  BookmarkId add_url(BookmarkId parent, std::string title, std::string url, Instant now);
  BookmarkId add_folder(BookmarkId parent, std::string title, Instant now);
  // Appends `node` to the end of `new_parent`'s children.
  void move(BookmarkId node, BookmarkId new_parent);
  void set_title(BookmarkId node, std::string title);
  void set_url(BookmarkId node, std::string url);

  // Empty when every structural invariant holds.
  std::optional<std::string> validate() const;

  // Used by the codec; validates and throws Error(kCorruptStore).
  static BookmarkStore from_parts(std::vector<BookmarkNode> roots, std::int64_t version);

  // Equal content; the dirty flag is session state and is ignored.
  friend bool operator==(const BookmarkStore& a, const BookmarkStore& b) {
    return a.version_ == b.version_ && a.roots_ == b.roots_;
  }

 private:
  BookmarkNode* find_mutable(BookmarkId id);
  void touch();

  std::vector<BookmarkNode> roots_;
  std::int64_t version_ = 0;
  bool dirty_ = false;
  BookmarkId next_id_ = 1;
};

}  // namespace mementoscope
