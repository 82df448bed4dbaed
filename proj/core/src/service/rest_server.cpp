#include "mementoscope/service/rest_server.hpp"

#include <httplib.h>

#include "mementoscope/archive/bookmark_codec.hpp"
#include "mementoscope/error.hpp"
#include "mementoscope/url.hpp"

namespace mementoscope {
namespace {

void send_json(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view code, const std::string& message) {
  send_json(res, status, Json{{"error", {{"code", code}, {"message", message}}}});
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kUnparseableDate:
    case ErrorCode::kMalformedDatestring:
    case ErrorCode::kNoRedirectSupport:
      return 400;
    case ErrorCode::kRootFetchFailed:
      return 502;
    case ErrorCode::kStoreConflict:
      return 409;
    default:
      return 500;
  }
}

Json parse_body(const httplib::Request& req) {
  Json body;
  try {
    body = Json::parse(req.body);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument, "request body is not JSON (byte " + std::to_string(e.byte) + ")");
  }
  if (!body.is_object()) throw Error(ErrorCode::kInvalidArgument, "request body must be a JSON object");
  return body;
}

std::string string_field(const Json& body, const char* key) {
  if (!body.contains(key) || !body.at(key).is_string()) {
    throw Error(ErrorCode::kInvalidArgument, std::string("\"") + key + "\" must be a string");
  }
  return body.at(key).get<std::string>();
}

std::optional<int> int_field(const Json& body, const char* key) {
  if (!body.contains(key) || body.at(key).is_null()) return std::nullopt;
  if (!body.at(key).is_number_integer()) {
    throw Error(ErrorCode::kInvalidArgument, std::string("\"") + key + "\" must be an integer");
  }
  return body.at(key).get<int>();
}

std::optional<std::uint64_t> path_id(const httplib::Request& req) {
  const std::string& s = req.matches[1];
  if (s.empty() || s.size() > 18) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace

struct RestServer::Impl {
  App& app;
  httplib::Server server;

  explicit Impl(App& a) : app(a) { routes(); }

  template <typename F>
  httplib::Server::Handler guarded(F f) {
    return [f](const httplib::Request& req, httplib::Response& res) {
      try {
        f(req, res);
      } catch (const Error& e) {
        send_error(res, status_for(e.code()), error_code_name(e.code()), e.detail());
      } catch (const std::exception& e) {
        send_error(res, 500, "INTERNAL", e.what());
      }
    };
  }

  void routes() {
    server.Post("/api/analyze", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const Json body = parse_body(req);
      AnalyzeRequest ar;
      ar.url = string_field(body, "url");
      ar.max_depth = int_field(body, "max_depth");
      if (body.contains("resources") && !body.at("resources").is_null()) {
        if (!body.at("resources").is_boolean()) {
          throw Error(ErrorCode::kInvalidArgument, "\"resources\" must be a boolean");
        }
        ar.resources = body.at("resources").get<bool>();
      }
      send_json(res, 200, report_to_json(*app.analyze(ar)));
    }));

    server.Get("/api/analyses", guarded([this](const httplib::Request&, httplib::Response& res) {
      Json out = Json::array();
      for (const auto& r : app.analyses()) out.push_back(report_to_json(*r));
      send_json(res, 200, out);
    }));

    server.Get(R"(/api/analyses/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto id = path_id(req);
      auto report = id ? app.analysis(*id) : nullptr;
      if (!report) return send_error(res, 404, "NOT_FOUND", "no analysis " + std::string(req.matches[1]));
      send_json(res, 200, report_to_json(*report));
    }));

    server.Get("/api/bookmarks", guarded([this](const httplib::Request&, httplib::Response& res) {
      send_json(res, 200, store_to_json(*app.bookmarks().snapshot()));
    }));

    server.Post("/api/bookmarks", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const Json body = parse_body(req);
      const std::string url = string_field(body, "url");
      auto parsed = parse_url(url);
      if (!parsed || !parsed->is_http()) {
        throw Error(ErrorCode::kInvalidArgument, "'" + url + "' is not an absolute http(s) URL");
      }
      std::optional<std::string> title;
      if (body.contains("title") && !body.at("title").is_null()) title = string_field(body, "title");
      const std::string archive = string_field(body, "archive");
      auto choice = archive_choice_from_name(archive);
      if (!choice) throw Error(ErrorCode::kInvalidArgument, "unknown archive '" + archive + "'");
      auto offset = int_field(body, "offset_seconds");
      if (offset && *offset < 0) throw Error(ErrorCode::kInvalidArgument, "offset_seconds must be >= 0");

      BookmarkOutcome out = app.bookmarks().bookmark(url, title, *choice, offset);
      send_json(res, 201,
                Json{{"mutation", mutation_to_json(out.mutation)},
                     {"job_id", out.job ? Json(out.job->id) : Json(nullptr)},
                     {"job", out.job ? job_to_json(*out.job) : Json(nullptr)}});
    }));

    server.Get("/api/jobs", guarded([this](const httplib::Request&, httplib::Response& res) {
      Json out = Json::array();
      for (const auto& j : app.bookmarks().jobs().list()) out.push_back(job_to_json(j));
      send_json(res, 200, out);
    }));

    server.Get(R"(/api/jobs/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto id = path_id(req);
      auto job = id ? app.bookmarks().jobs().get(*id) : std::nullopt;
      if (!job) return send_error(res, 404, "NOT_FOUND", "no job " + std::string(req.matches[1]));
      send_json(res, 200, job_to_json(*job));
    }));

    server.Get("/api/config/archives", guarded([this](const httplib::Request&, httplib::Response& res) {
      send_json(res, 200, known_archives_to_json(app.config().known_archives));
    }));

    if (app.config().static_dir) server.set_mount_point("/", app.config().static_dir->string());

    server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
      if (!res.body.empty()) return;
      if (res.status == 404) {
        send_error(res, 404, "NOT_FOUND", "no route for " + req.method + " " + req.path);
      } else {
        send_error(res, res.status, "HTTP_ERROR", "request failed");
      }
    });
  }
};

RestServer::RestServer(App& app) : impl_(std::make_unique<Impl>(app)) {}

RestServer::~RestServer() { stop(); }

int RestServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool RestServer::listen() { return impl_->server.listen_after_bind(); }

void RestServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void RestServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace mementoscope
