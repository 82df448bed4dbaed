#include "mementoscope/archive/bookmarks.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "mementoscope/error.hpp"

namespace mementoscope {
namespace {

std::string format_uuid(const unsigned char* b) {
  char buf[40];
  std::snprintf(buf, sizeof buf,
                "%02x%02x%02x%02x-%02x%02x-%02x%02x-%02x%02x-%02x%02x%02x%02x%02x%02x", b[0], b[1],
                b[2], b[3], b[4], b[5], b[6], b[7], b[8], b[9], b[10], b[11], b[12], b[13], b[14],
                b[15]);
  return buf;
}

// RFC 4122 name-based UUID, SHA-1 flavour, in the URL namespace.
std::string uuid_v5(std::string_view name) {
  static constexpr unsigned char kUrlNamespace[16] = {0x6b, 0xa7, 0xb8, 0x11, 0x9d, 0xad,
                                                     0x11, 0xd1, 0x80, 0xb4, 0x00, 0xc0,
                                                     0x4f, 0xd4, 0x30, 0xc8};
  std::string input(reinterpret_cast<const char*>(kUrlNamespace), sizeof kUrlNamespace);
  input += name;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(input.data(), input.size(), digest, &len, EVP_sha1(), nullptr);
  digest[6] = static_cast<unsigned char>((digest[6] & 0x0F) | 0x50);
  digest[8] = static_cast<unsigned char>((digest[8] & 0x3F) | 0x80);
  return format_uuid(digest);
}

const BookmarkNode* find_in(const std::vector<BookmarkNode>& nodes, BookmarkId id,
                            const BookmarkNode** parent, const BookmarkNode* current_parent) {
  for (const auto& n : nodes) {
    if (n.id == id) {
      if (parent) *parent = current_parent;
      return &n;
    }
    if (const auto* hit = find_in(n.children, id, parent, &n)) return hit;
  }
  return nullptr;
}

void visit(const std::vector<BookmarkNode>& nodes,
           const std::function<void(const BookmarkNode&)>& fn) {
  for (const auto& n : nodes) {
    fn(n);
    visit(n.children, fn);
  }
}

[[noreturn]] void conflict(BookmarkId id) {
  throw Error(ErrorCode::kStoreConflict, "bookmark node " + std::to_string(id) + " no longer exists");
}

}  // namespace

std::string_view bookmark_node_type_name(BookmarkNodeType t) {
  switch (t) {
    case BookmarkNodeType::kUrl: return "URL";
    case BookmarkNodeType::kFolder: return "FOLDER";
    case BookmarkNodeType::kBookmarkBar: return "BOOKMARK_BAR";
    case BookmarkNodeType::kNoArchive: return "NO_ARCHIVE";
    case BookmarkNodeType::kArchiveToday: return "ARCHIVE_TODAY";
    case BookmarkNodeType::kInternetArchive: return "INTERNET_ARCHIVE";
    case BookmarkNodeType::kMegalodon: return "MEGALODON";
    case BookmarkNodeType::kOtherNode: return "OTHER_NODE";
    case BookmarkNodeType::kMobile: return "MOBILE";
  }
  return "URL";
}

std::optional<BookmarkNodeType> bookmark_node_type_from_name(std::string_view name) {
  for (auto t : kAllBookmarkNodeTypes) {
    if (bookmark_node_type_name(t) == name) return t;
  }
  return std::nullopt;
}

bool is_permanent(BookmarkNodeType t) {
  return t != BookmarkNodeType::kUrl && t != BookmarkNodeType::kFolder;
}

bool is_folder_like(BookmarkNodeType t) { return t != BookmarkNodeType::kUrl; }

std::string_view permanent_node_title(BookmarkNodeType t) {
  switch (t) {
    case BookmarkNodeType::kBookmarkBar: return "Bookmarks bar";
    case BookmarkNodeType::kNoArchive: return "None";
    case BookmarkNodeType::kArchiveToday: return "Archive.today";
    case BookmarkNodeType::kInternetArchive: return "Internet Archive";
    case BookmarkNodeType::kMegalodon: return "Megalodon";
    case BookmarkNodeType::kOtherNode: return "Other bookmarks";
    case BookmarkNodeType::kMobile: return "Mobile bookmarks";
    default: return "";
  }
}

std::string permanent_node_guid(BookmarkNodeType t) {
  return uuid_v5("mementoscope:bookmarks:" + std::string(bookmark_node_type_name(t)));
}

std::string random_guid() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  unsigned char b[16];
  for (int i = 0; i < 16; i += 8) {
    const auto v = rng();
    for (int k = 0; k < 8; ++k) b[i + k] = static_cast<unsigned char>(v >> (8 * k));
  }
  b[6] = static_cast<unsigned char>((b[6] & 0x0F) | 0x40);
  b[8] = static_cast<unsigned char>((b[8] & 0x3F) | 0x80);
  return format_uuid(b);
}

BookmarkStore BookmarkStore::fresh(Instant now) {
  BookmarkStore store;
  for (auto type : kPermanentNodeTypes) {
    BookmarkNode node;
    node.id = store.next_id_++;
    node.guid = permanent_node_guid(type);
    node.type = type;
    node.title = std::string(permanent_node_title(type));
    node.created_at = now;
    store.roots_.push_back(std::move(node));
  }
  store.version_ = 1;
  return store;
}

const BookmarkNode& BookmarkStore::permanent(BookmarkNodeType type) const {
  for (const auto& r : roots_) {
    if (r.type == type) return r;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no permanent node " + std::string(bookmark_node_type_name(type)));
}

const BookmarkNode* BookmarkStore::find(BookmarkId id) const {
  return find_in(roots_, id, nullptr, nullptr);
}

const BookmarkNode* BookmarkStore::parent_of(BookmarkId id) const {
  const BookmarkNode* parent = nullptr;
  find_in(roots_, id, &parent, nullptr);
  return parent;
}

BookmarkNode* BookmarkStore::find_mutable(BookmarkId id) {
  return const_cast<BookmarkNode*>(find(id));
}

const BookmarkNode* BookmarkStore::original_url_node(std::string_view url) const {
  const BookmarkNode* best = nullptr;
  visit(roots_, [&](const BookmarkNode& n) {
    if (n.type == BookmarkNodeType::kUrl && n.url && *n.url == url && (!best || n.id < best->id)) {
      best = &n;
    }
  });
  return best;
}

void BookmarkStore::touch() {
  ++version_;
  dirty_ = true;
}

BookmarkId BookmarkStore::add_url(BookmarkId parent, std::string title, std::string url,
                                  Instant now) {
  BookmarkNode* p = find_mutable(parent);
  if (!p) conflict(parent);
  if (!is_folder_like(p->type)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot add children to a URL node");
  }
  BookmarkNode node;
  node.id = next_id_++;
  node.guid = random_guid();
  node.type = BookmarkNodeType::kUrl;
  node.title = std::move(title);
  node.url = std::move(url);
  node.created_at = now;
  p->children.push_back(std::move(node));
  touch();
  return p->children.back().id;
}

BookmarkId BookmarkStore::add_folder(BookmarkId parent, std::string title, Instant now) {
  BookmarkNode* p = find_mutable(parent);
  if (!p) conflict(parent);
  if (!is_folder_like(p->type)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot add children to a URL node");
  }
  BookmarkNode node;
  node.id = next_id_++;
  node.guid = random_guid();
  node.type = BookmarkNodeType::kFolder;
  node.title = std::move(title);
  node.created_at = now;
  p->children.push_back(std::move(node));
  touch();
  return p->children.back().id;
}

void BookmarkStore::move(BookmarkId node_id, BookmarkId new_parent_id) {
  const BookmarkNode* node = find(node_id);
  if (!node) conflict(node_id);
  if (is_permanent(node->type)) {
    throw Error(ErrorCode::kInvalidArgument, "permanent nodes cannot be moved");
  }
  if (!find(new_parent_id)) conflict(new_parent_id);
  if (find_in(node->children, new_parent_id, nullptr, nullptr) || node_id == new_parent_id) {
    throw Error(ErrorCode::kInvalidArgument, "cannot move a node into its own subtree");
  }
  if (!is_folder_like(find(new_parent_id)->type)) {
    throw Error(ErrorCode::kInvalidArgument, "cannot move into a URL node");
  }
  BookmarkNode* old_parent = const_cast<BookmarkNode*>(parent_of(node_id));
  auto& siblings = old_parent->children;
  auto it = std::find_if(siblings.begin(), siblings.end(),
                         [&](const BookmarkNode& n) { return n.id == node_id; });
  BookmarkNode detached = std::move(*it);
  siblings.erase(it);
  find_mutable(new_parent_id)->children.push_back(std::move(detached));
  touch();
}

void BookmarkStore::set_title(BookmarkId id, std::string title) {
  BookmarkNode* node = find_mutable(id);
  if (!node) conflict(id);
  node->title = std::move(title);
  touch();
}

void BookmarkStore::set_url(BookmarkId id, std::string url) {
  BookmarkNode* node = find_mutable(id);
  if (!node) conflict(id);
  if (node->type != BookmarkNodeType::kUrl) {
    throw Error(ErrorCode::kInvalidArgument, "only URL nodes carry a url");
  }
  node->url = std::move(url);
  touch();
}

std::optional<std::string> BookmarkStore::validate() const {
  std::set<BookmarkId> ids;
  std::set<std::string> guids;
  std::set<BookmarkNodeType> permanents;
  BookmarkId max_id = 0;
  std::optional<std::string> problem;

  std::function<void(const BookmarkNode&, bool)> check = [&](const BookmarkNode& n, bool root) {
    if (problem) return;
    if (!ids.insert(n.id).second) {
      problem = "duplicate id " + std::to_string(n.id);
      return;
    }
    if (!n.guid.empty() && !guids.insert(n.guid).second) {
      problem = "duplicate guid " + n.guid;
      return;
    }
    max_id = std::max(max_id, n.id);
    if (is_permanent(n.type)) {
      if (!root) {
        problem = "permanent node " + std::to_string(n.id) + " below the root level";
        return;
      }
      if (!permanents.insert(n.type).second) {
        problem = "second " + std::string(bookmark_node_type_name(n.type)) + " node";
        return;
      }
      if (n.guid != permanent_node_guid(n.type)) {
        problem = "permanent node " + std::to_string(n.id) + " has a foreign guid";
        return;
      }
    } else if (root) {
      problem = "non-permanent node " + std::to_string(n.id) + " at the root level";
      return;
    }
    if (n.type == BookmarkNodeType::kUrl) {
      if (!n.url) problem = "URL node " + std::to_string(n.id) + " without url";
      if (!n.children.empty()) problem = "URL node " + std::to_string(n.id) + " has children";
    } else if (n.url) {
      problem = "folder " + std::to_string(n.id) + " carries a url";
    }
    for (const auto& c : n.children) check(c, false);
  };
  for (const auto& r : roots_) check(r, true);
  if (problem) return problem;
  if (permanents.size() != kPermanentNodeTypes.size()) return std::string("missing permanent nodes");
  if (next_id_ <= max_id) return std::string("next id collides with an existing node");
  return std::nullopt;
}

BookmarkStore BookmarkStore::from_parts(std::vector<BookmarkNode> roots, std::int64_t version) {
  BookmarkStore store;
  store.roots_ = std::move(roots);
  store.version_ = version;
  BookmarkId max_id = 0;
  visit(store.roots_, [&](const BookmarkNode& n) { max_id = std::max(max_id, n.id); });
  store.next_id_ = max_id + 1;
  if (auto problem = store.validate()) throw Error(ErrorCode::kCorruptStore, *problem);
  return store;
}

}  // namespace mementoscope
