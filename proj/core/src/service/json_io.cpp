#include "mementoscope/service/json_io.hpp"

#include "mementoscope/error.hpp"

namespace mementoscope {
namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

[[noreturn]] void bad_config(const std::string& what) {
  throw Error(ErrorCode::kInvalidConfig, what);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_config(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) bad_config(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

int optional_int(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_number_integer()) bad_config(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

Json datetime_to_json(const MementoDatetime& dt) {
  return Json{{"raw", dt.raw},
              {"datetime", dt.instant ? Json(format_iso8601(*dt.instant)) : Json(nullptr)}};
}

MementoDatetime datetime_from_json(const Json& j) {
  MementoDatetime dt;
  dt.raw = j.at("raw").get<std::string>();
  if (j.contains("datetime") && j.at("datetime").is_string()) {
    dt.instant = parse_iso8601(j.at("datetime").get<std::string>());
  }
  return dt;
}

Json frame_node_to_json(const FrameNode& node) {
  Json children = Json::array();
  for (const auto& c : node.children) children.push_back(frame_node_to_json(c));
  return Json{
      {"url", node.url},
      {"final_url", node.final_url},
      {"depth", node.depth},
      {"status", node.status},
      {"memento_datetime", node.memento_datetime ? datetime_to_json(*node.memento_datetime) : Json(nullptr)},
      {"fetch_error", node.fetch_error ? Json(fetch_error_name(*node.fetch_error)) : Json(nullptr)},
      {"content_type", optional_json(node.content_type)},
      {"children", std::move(children)},
  };
}

FrameNode frame_node_from_json(const Json& j) {
  FrameNode n;
  n.url = j.at("url").get<std::string>();
  n.final_url = j.at("final_url").get<std::string>();
  n.depth = j.at("depth").get<int>();
  n.status = j.at("status").get<int>();
  if (!j.at("memento_datetime").is_null()) n.memento_datetime = datetime_from_json(j.at("memento_datetime"));
  if (!j.at("fetch_error").is_null()) {
    n.fetch_error = fetch_error_from_name(j.at("fetch_error").get<std::string>());
  }
  if (!j.at("content_type").is_null()) n.content_type = j.at("content_type").get<std::string>();
  for (const auto& c : j.at("children")) n.children.push_back(frame_node_from_json(c));
  return n;
}

Json frame_tree_to_json(const FrameTree& tree) {
  return Json{{"node_count", tree.node_count()}, {"root", frame_node_to_json(tree.root)}};
}

FrameTree frame_tree_from_json(const Json& j) { return FrameTree{frame_node_from_json(j.at("root"))}; }

Json classification_to_json(const PageClassification& c) {
  Json dates = Json::array();
  for (const auto& d : c.state.memento_dates) dates.push_back(datetime_to_json(d));
  Json deep = Json::array();
  for (const auto& d : c.deep_dates) deep.push_back(Json{{"url", d.url}, {"datetime", datetime_to_json(d.datetime)}});
  return Json{
      {"kind", page_kind_name(c.kind)},
      {"memento_info", c.state.memento_info},
      {"memento_datetime",
       c.state.memento_datetime ? datetime_to_json(*c.state.memento_datetime) : Json(nullptr)},
      {"memento_dates", std::move(dates)},
      {"mixed_memento_live_web", c.state.mixed_memento_live_web},
      {"deep_dates", std::move(deep)},
  };
}

PageClassification classification_from_json(const Json& j) {
  PageClassification c;
  auto kind = page_kind_from_name(j.at("kind").get<std::string>());
  if (!kind) throw Error(ErrorCode::kInvalidArgument, "unknown page kind");
  c.kind = *kind;
  c.state.memento_info = j.at("memento_info").get<bool>();
  if (!j.at("memento_datetime").is_null()) c.state.memento_datetime = datetime_from_json(j.at("memento_datetime"));
  for (const auto& d : j.at("memento_dates")) c.state.memento_dates.push_back(datetime_from_json(d));
  c.state.mixed_memento_live_web = j.at("mixed_memento_live_web").get<bool>();
  for (const auto& d : j.at("deep_dates")) {
    c.deep_dates.push_back(DeepDate{d.at("url").get<std::string>(), datetime_from_json(d.at("datetime"))});
  }
  return c;
}

Json resource_datetimes_to_json(const std::vector<ResourceDatetime>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(Json{{"url", e.url}, {"datetime", datetime_to_json(e.datetime)}});
  return out;
}

Json known_archive_to_json(const KnownArchive& a) {
  Json j{
      {"id", a.id},
      {"display_name", a.display_name},
      {"host_patterns", a.host_patterns},
      {"iframe_display", a.iframe_display},
      {"redirect_style", redirect_style_name(a.redirect_style)},
      {"replay_base", optional_json(a.replay_base)},
  };
  if (a.submit) {
    j["submit"] = Json{{"method", submit_method_name(a.submit->method)}, {"url", a.submit->url}};
  } else {
    j["submit"] = nullptr;
  }
  return j;
}

KnownArchive known_archive_from_json(const Json& j) {
  if (!j.is_object()) bad_config("archive entry must be an object");
  KnownArchive a;
  a.id = require_string(j, "id");
  a.display_name = j.contains("display_name") ? require_string(j, "display_name") : a.id;
  const Json& hosts = require(j, "host_patterns");
  if (!hosts.is_array()) bad_config("archive \"" + a.id + "\": host_patterns must be an array");
  for (const auto& h : hosts) {
    if (!h.is_string()) bad_config("archive \"" + a.id + "\": host patterns must be strings");
    a.host_patterns.push_back(h.get<std::string>());
  }
  if (j.contains("iframe_display")) {
    if (!j.at("iframe_display").is_boolean()) bad_config("archive \"" + a.id + "\": iframe_display must be a boolean");
    a.iframe_display = j.at("iframe_display").get<bool>();
  }
  if (j.contains("redirect_style")) {
    auto style = redirect_style_from_name(require_string(j, "redirect_style"));
    if (!style) bad_config("archive \"" + a.id + "\": unknown redirect_style");
    a.redirect_style = *style;
  }
  if (j.contains("replay_base") && !j.at("replay_base").is_null()) a.replay_base = require_string(j, "replay_base");
  if (j.contains("submit") && !j.at("submit").is_null()) {
    const Json& s = j.at("submit");
    auto method = submit_method_from_name(require_string(s, "method"));
    if (!method) bad_config("archive \"" + a.id + "\": unknown submit method");
    a.submit = SubmitEndpoint{*method, require_string(s, "url")};
  }
  if (a.redirect_style == RedirectStyle::kNearestDatetime && !a.replay_base) {
    bad_config("archive \"" + a.id + "\": NEAREST_DATETIME needs a replay_base");
  }
  return a;
}

Json known_archives_to_json(const std::vector<KnownArchive>& archives) {
  Json out = Json::array();
  for (const auto& a : archives) out.push_back(known_archive_to_json(a));
  return out;
}

Json fetch_config_to_json(const FetchConfig& cfg) {
  return Json{
      {"max_depth", cfg.max_depth},
      {"max_frames", cfg.max_frames},
      {"redirect_limit", cfg.redirect_limit},
      {"per_request_timeout_ms", cfg.per_request_timeout.count()},
      {"concurrency_limit", cfg.concurrency_limit},
      {"user_agent", cfg.user_agent},
      {"fetch_subresources", cfg.fetch_subresources},
      {"min_year", cfg.year_bounds.min_year},
      {"max_year", cfg.year_bounds.max_year},
  };
}

FetchConfig fetch_config_from_json(const Json& j, FetchConfig base) {
  if (!j.is_object()) bad_config("\"fetch\" must be an object");
  FetchConfig cfg = base;
  cfg.max_depth = optional_int(j, "max_depth", cfg.max_depth);
  cfg.max_frames = optional_int(j, "max_frames", cfg.max_frames);
  cfg.redirect_limit = optional_int(j, "redirect_limit", cfg.redirect_limit);
  cfg.per_request_timeout = std::chrono::milliseconds(
      optional_int(j, "per_request_timeout_ms", static_cast<int>(cfg.per_request_timeout.count())));
  cfg.concurrency_limit = optional_int(j, "concurrency_limit", cfg.concurrency_limit);
  if (j.contains("user_agent")) cfg.user_agent = require_string(j, "user_agent");
  if (j.contains("fetch_subresources")) {
    if (!j.at("fetch_subresources").is_boolean()) bad_config("\"fetch_subresources\" must be a boolean");
    cfg.fetch_subresources = j.at("fetch_subresources").get<bool>();
  }
  cfg.year_bounds.min_year = optional_int(j, "min_year", cfg.year_bounds.min_year);
  cfg.year_bounds.max_year = optional_int(j, "max_year", cfg.year_bounds.max_year);
  if (auto problem = validate_fetch_config(cfg)) bad_config(*problem);
  return cfg;
}

Json job_to_json(const ArchiveJob& job) {
  return Json{
      {"id", job.id},
      {"archive_id", job.archive_id},
      {"target_url", job.target_url},
      {"submitted_at", format_iso8601(job.submitted_at)},
      {"completed_at", job.completed_at ? Json(format_iso8601(*job.completed_at)) : Json(nullptr)},
      {"status", job_status_name(job.status)},
      {"result_url", optional_json(job.result_url)},
      {"error", optional_json(job.error)},
  };
}

Json mutation_to_json(const BookmarkMutation& m) {
  return Json{
      {"live_node", m.live_node},
      {"created_live_node", m.created_live_node},
      {"folder", optional_json(m.folder)},
      {"created_folder", m.created_folder},
      {"archive_node", optional_json(m.archive_node)},
      {"archive_url", optional_json(m.archive_url)},
      {"archive_id", m.archive_id.empty() ? Json(nullptr) : Json(m.archive_id)},
  };
}

Json offset_result_to_json(const OffsetExperimentResult& r) {
  return Json{{"offset_seconds", r.offset_seconds},
              {"samples", r.samples},
              {"matches", r.matches},
              {"match_rate", r.match_rate}};
}

}  // namespace mementoscope
