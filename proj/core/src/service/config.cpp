#include "mementoscope/service/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mementoscope/error.hpp"

namespace mementoscope {
namespace {

std::filesystem::path resolve_path(const std::filesystem::path& p, const std::filesystem::path& base) {
  if (p.is_absolute() || base.empty()) return p;
  return base / p;
}

}  // namespace

ListenAddress parse_listen_address(std::string_view text) {
  ListenAddress out;
  std::string_view port_part = text;
  const auto colon = text.rfind(':');
  if (colon != std::string_view::npos) {
    if (colon > 0) out.host = std::string(text.substr(0, colon));
    port_part = text.substr(colon + 1);
  }
  if (port_part.empty() || port_part.size() > 5) {
    throw Error(ErrorCode::kInvalidConfig, "bad listen address '" + std::string(text) + "'");
  }
  int port = 0;
  for (char c : port_part) {
    if (c < '0' || c > '9') throw Error(ErrorCode::kInvalidConfig, "bad listen address '" + std::string(text) + "'");
    port = port * 10 + (c - '0');
  }
  if (port > 65535) throw Error(ErrorCode::kInvalidConfig, "port out of range in '" + std::string(text) + "'");
  out.port = port;
  return out;
}

std::optional<std::string> validate_app_config(const AppConfig& cfg) {
  if (auto problem = validate_archives(cfg.known_archives)) return problem;
  if (auto problem = validate_fetch_config(cfg.fetch)) return problem;
  for (auto id : {archive_ids::kInternetArchive, archive_ids::kArchiveToday, archive_ids::kMegalodon}) {
    const KnownArchive* a = find_archive_by_id(cfg.known_archives, id);
    if (!a) return "known_archives lacks \"" + std::string(id) + "\"";
    if (!a->submit) return "archive \"" + std::string(id) + "\" needs a submit endpoint";
  }
  for (auto id : {archive_ids::kTrove, archive_ids::kPermaCc}) {
    const KnownArchive* a = find_archive_by_id(cfg.known_archives, id);
    if (!a) return "known_archives lacks \"" + std::string(id) + "\"";
    if (!a->iframe_display) return "archive \"" + std::string(id) + "\" must have iframe_display";
  }
  if (cfg.default_offset_seconds < 0) return "default_offset_seconds must be >= 0";
  return std::nullopt;
}

AppConfig app_config_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidConfig, "config must be a JSON object");
  AppConfig cfg;
  if (j.contains("known_archives")) {
    const Json& list = j.at("known_archives");
    if (!list.is_array()) throw Error(ErrorCode::kInvalidConfig, "\"known_archives\" must be an array");
    cfg.known_archives.clear();
    for (const auto& a : list) cfg.known_archives.push_back(known_archive_from_json(a));
  }
  if (j.contains("fetch")) cfg.fetch = fetch_config_from_json(j.at("fetch"), cfg.fetch);
  auto string_field = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    if (!j.at(key).is_string()) throw Error(ErrorCode::kInvalidConfig, std::string("\"") + key + "\" must be a string");
    return j.at(key).get<std::string>();
  };
  if (auto v = string_field("store_path")) cfg.store_path = resolve_path(*v, base_dir);
  if (auto v = string_field("log_path")) cfg.log_path = resolve_path(*v, base_dir);
  if (auto v = string_field("listen_address")) cfg.listen_address = parse_listen_address(*v);
  if (auto v = string_field("static_dir")) cfg.static_dir = resolve_path(*v, base_dir);
  if (j.contains("default_offset_seconds")) {
    if (!j.at("default_offset_seconds").is_number_integer()) {
      throw Error(ErrorCode::kInvalidConfig, "\"default_offset_seconds\" must be an integer");
    }
    cfg.default_offset_seconds = j.at("default_offset_seconds").get<int>();
  }
  if (auto problem = validate_app_config(cfg)) throw Error(ErrorCode::kInvalidConfig, *problem);
  return cfg;
}

Json app_config_to_json(const AppConfig& cfg) {
  return Json{
      {"known_archives", known_archives_to_json(cfg.known_archives)},
      {"fetch", fetch_config_to_json(cfg.fetch)},
      {"store_path", cfg.store_path.string()},
      {"log_path", cfg.log_path.string()},
      {"listen_address", cfg.listen_address.to_string()},
      {"default_offset_seconds", cfg.default_offset_seconds},
      {"static_dir", cfg.static_dir ? Json(cfg.static_dir->string()) : Json(nullptr)},
  };
}

AppConfig load_app_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidConfig,
                path.string() + ": parse error at byte " + std::to_string(e.byte));
  }
  return app_config_from_json(j, path.parent_path());
}

std::optional<std::string> process_env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

void apply_env_overrides(AppConfig& cfg, const EnvLookup& env) {
  if (auto v = env("MEMENTOSCOPE_LISTEN")) cfg.listen_address = parse_listen_address(*v);
  if (auto v = env("MEMENTOSCOPE_STORE")) cfg.store_path = *v;
}

}  // namespace mementoscope
