#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mementoscope/core/known_archive.hpp"
#include "mementoscope/fetch/fetcher.hpp"
#include "mementoscope/service/json_io.hpp"

namespace mementoscope {

struct ListenAddress {
  std::string host = "127.0.0.1";
  int port = 8787;

  std::string to_string() const { return host + ":" + std::to_string(port); }
};

// "host:port", ":port" or "port". Throws Error(kInvalidConfig).
ListenAddress parse_listen_address(std::string_view text);

struct AppConfig {
  std::vector<KnownArchive> known_archives = default_known_archives();
  FetchConfig fetch;
  std::filesystem::path store_path = "bookmarks.json";
  std::filesystem::path log_path = "archive_urls.txt";
  ListenAddress listen_address;
  int default_offset_seconds = 30;
  // Directory served at / by `serve`, typically a built dashboard.
  std::optional<std::filesystem::path> static_dir;
};

// Empty when the config is usable: archives valid, the three submission
// archives and both iframe-display archives present, offset >= 0.
std::optional<std::string> validate_app_config(const AppConfig& cfg);

// Keys missing from the document keep their defaults. Relative paths are
// resolved against `base_dir`. Throws Error(kInvalidConfig).
AppConfig app_config_from_json(const Json& j, const std::filesystem::path& base_dir = {});
Json app_config_to_json(const AppConfig& cfg);
AppConfig load_app_config(const std::filesystem::path& path);

// MEMENTOSCOPE_LISTEN and MEMENTOSCOPE_STORE.
using EnvLookup = std::function<std::optional<std::string>(const char*)>;
std::optional<std::string> process_env(const char* name);
void apply_env_overrides(AppConfig& cfg, const EnvLookup& env = process_env);

}  // namespace mementoscope
