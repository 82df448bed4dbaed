#include "mementoscope/archive/bookmark_codec.hpp"

#include <fstream>
#include <sstream>

#include "mementoscope/error.hpp"

namespace mementoscope {
namespace {

using nlohmann::json;

json node_to_json(const BookmarkNode& n) {
  json j = {
      {"id", n.id},
      {"guid", n.guid},
      {"type", bookmark_node_type_name(n.type)},
      {"title", n.title},
      {"created_at", format_iso8601(n.created_at)},
  };
  if (n.url) j["url"] = *n.url;
  if (n.type != BookmarkNodeType::kUrl) {
    json children = json::array();
    for (const auto& c : n.children) children.push_back(node_to_json(c));
    j["children"] = std::move(children);
  }
  return j;
}

[[noreturn]] void corrupt(const std::string& why) { throw Error(ErrorCode::kCorruptStore, why); }

BookmarkNode node_from_json(const json& j) {
  if (!j.is_object()) corrupt("node is not an object");
  BookmarkNode n;
  try {
    n.id = j.at("id").get<BookmarkId>();
    n.guid = j.at("guid").get<std::string>();
    const auto type = bookmark_node_type_from_name(j.at("type").get<std::string>());
    if (!type) corrupt("unknown node type '" + j.at("type").get<std::string>() + "'");
    n.type = *type;
    n.title = j.at("title").get<std::string>();
    const auto created = parse_iso8601(j.at("created_at").get<std::string>());
    if (!created) corrupt("bad created_at on node " + std::to_string(n.id));
    n.created_at = *created;
    if (j.contains("url")) n.url = j.at("url").get<std::string>();
    if (j.contains("children")) {
      for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c));
    }
  } catch (const json::exception& e) {
    corrupt(std::string("schema: ") + e.what());
  }
  return n;
}

}  // namespace

json store_to_json(const BookmarkStore& store) {
  json roots = json::array();
  for (const auto& r : store.roots()) roots.push_back(node_to_json(r));
  return {{"version", store.version()}, {"roots", std::move(roots)}};
}

BookmarkStore store_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("roots") || !doc.at("roots").is_array() ||
      !doc.contains("version") || !doc.at("version").is_number_integer()) {
    corrupt("expected an object with integer 'version' and array 'roots'");
  }
  std::vector<BookmarkNode> roots;
  for (const auto& r : doc.at("roots")) roots.push_back(node_from_json(r));
  return BookmarkStore::from_parts(std::move(roots), doc.at("version").get<std::int64_t>());
}

std::string encode_store(const BookmarkStore& store) { return store_to_json(store).dump(2) + "\n"; }

BookmarkStore decode_store(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    corrupt("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return store_from_json(doc);
}

BookmarkStore load_store(const std::filesystem::path& path, Instant now) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return BookmarkStore::fresh(now);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return decode_store(buf.str());
}

void save_store(const BookmarkStore& store, const std::filesystem::path& path) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + tmp);
    out << encode_store(store);
    out.flush();
    if (!out) throw Error(ErrorCode::kIoError, "short write to " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot replace " + path.string() + ": " + ec.message());
}

}  // namespace mementoscope
