#include <gtest/gtest.h>

#include <fstream>
#include <map>

#include "mementoscope/error.hpp"
#include "mementoscope/fetch/fixture_transport.hpp"
#include "mementoscope/service/app.hpp"
#include "mementoscope/service/config.hpp"
#include "mementoscope/service/json_io.hpp"
#include "mementoscope/core/messages.hpp"
#include "mementoscope/service/report.hpp"
#include "random_trees.hpp"
#include "test_paths.hpp"

using namespace mementoscope;
using namespace mementoscope::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::kInvalidArgument;
}

AppConfig in_memory_config() {
  AppConfig c;
  c.store_path.clear();
  c.log_path.clear();
  return c;
}

}  // namespace

TEST(ListenAddress, Forms) {
  auto a = parse_listen_address("0.0.0.0:9000");
  EXPECT_EQ(a.host, "0.0.0.0");
  EXPECT_EQ(a.port, 9000);
  EXPECT_EQ(parse_listen_address(":81").host, "127.0.0.1");
  EXPECT_EQ(parse_listen_address("8080").port, 8080);
  for (const char* bad : {"", "host:", "host:abc", "host:70000", ":-1"}) {
    EXPECT_EQ(code_of([&] { parse_listen_address(bad); }), ErrorCode::kInvalidConfig) << bad;
  }
}

TEST(AppConfig, DefaultsValid) {
  AppConfig c;
  EXPECT_FALSE(validate_app_config(c));
  EXPECT_EQ(c.default_offset_seconds, 30);
  EXPECT_EQ(c.listen_address.to_string(), "127.0.0.1:8787");
}

TEST(AppConfig, RequiredArchives) {
  for (const char* id : {"internet_archive", "archive_today", "megalodon", "trove", "perma_cc"}) {
    AppConfig c;
    std::erase_if(c.known_archives, [&](const KnownArchive& a) { return a.id == id; });
    EXPECT_TRUE(validate_app_config(c)) << id;
  }
  AppConfig c;
  c.default_offset_seconds = -1;
  EXPECT_TRUE(validate_app_config(c));
}

TEST(AppConfig, JsonRoundTripAndRelativePaths) {
  AppConfig c;
  c.fetch.max_depth = 2;
  c.default_offset_seconds = 60;
  c.listen_address = {"0.0.0.0", 9999};
  c.store_path = "/var/lib/m/bookmarks.json";
  c.log_path = "/var/lib/m/archive_urls.txt";
  const auto back = app_config_from_json(app_config_to_json(c));
  EXPECT_EQ(back.known_archives, c.known_archives);
  EXPECT_EQ(back.fetch, c.fetch);
  EXPECT_EQ(back.store_path, c.store_path);
  EXPECT_EQ(back.default_offset_seconds, 60);
  EXPECT_EQ(back.listen_address.to_string(), "0.0.0.0:9999");

  auto rel = app_config_from_json(Json{{"store_path", "data/b.json"}}, "/etc/m");
  EXPECT_EQ(rel.store_path, std::filesystem::path("/etc/m/data/b.json"));
  EXPECT_EQ(rel.log_path, std::filesystem::path("archive_urls.txt"));
}

TEST(AppConfig, InvalidDocuments) {
  EXPECT_EQ(code_of([] { app_config_from_json(Json{{"default_offset_seconds", "soon"}}); }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([] { app_config_from_json(Json{{"known_archives", Json::array()}}); }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([] { app_config_from_json(Json{{"fetch", {{"max_depth", 0}}}}); }), ErrorCode::kInvalidConfig);
  TempDir dir;
  {
    std::ofstream(dir / "bad.json") << "{\"listen_address\": ";
  }
  EXPECT_EQ(code_of([&] { load_app_config(dir / "bad.json"); }), ErrorCode::kInvalidConfig);
  EXPECT_EQ(code_of([&] { load_app_config(dir / "missing.json"); }), ErrorCode::kIoError);
}

TEST(AppConfig, EnvOverrides) {
  std::map<std::string, std::string> env = {{"MEMENTOSCOPE_LISTEN", "0.0.0.0:1234"},
                                            {"MEMENTOSCOPE_STORE", "/tmp/x.json"}};
  AppConfig c;
  apply_env_overrides(c, [&](const char* name) -> std::optional<std::string> {
    auto it = env.find(name);
    if (it == env.end()) return std::nullopt;
    return it->second;
  });
  EXPECT_EQ(c.listen_address.port, 1234);
  EXPECT_EQ(c.store_path, std::filesystem::path("/tmp/x.json"));
}

TEST(JsonIo, FrameTreeRoundTrip) {
  RandomTreeGenerator gen(77);
  for (int i = 0; i < 200; ++i) {
    const auto t = gen.next();
    ASSERT_EQ(frame_tree_from_json(frame_tree_to_json(t)), t);
  }
}

TEST(JsonIo, ClassificationRoundTrip) {
  RandomTreeGenerator gen(78);
  const auto archives = default_known_archives();
  for (int i = 0; i < 200; ++i) {
    const auto c = classify_tree(gen.next(), archives);
    ASSERT_EQ(classification_from_json(classification_to_json(c)), c);
  }
}

TEST(JsonIo, DatetimeShape) {
  auto j = datetime_to_json(parse_http_date("Mon, 12 Apr 2010 12:50:57 GMT"));
  EXPECT_EQ(j["raw"], "Mon, 12 Apr 2010 12:50:57 GMT");
  EXPECT_EQ(j["datetime"], "2010-04-12T12:50:57Z");
  auto u = datetime_to_json(MementoDatetime::unparsed("??"));
  EXPECT_TRUE(u["datetime"].is_null());
}

TEST(JsonIo, KnownArchivesRoundTrip) {
  for (const auto& a : default_known_archives()) {
    EXPECT_EQ(known_archive_from_json(known_archive_to_json(a)), a);
  }
}

TEST(Report, BadgeAndPopupFollowClassification) {
  FixtureTransport t(http_fixtures());
  const auto r = analyze_url(t, "https://web.archive.org/web/20100412125057/http://www.mitre.org/", FetchConfig{},
                             default_known_archives(), true, 7, make_instant(2021, 1, 1));
  EXPECT_EQ(r.badge, "2010-04-12");
  EXPECT_EQ(r.popup, popup_lines(r.classification));
  ASSERT_TRUE(r.resource_datetimes);
  EXPECT_EQ(r.resource_datetimes->size(), 1u);
  const auto j = report_to_json(r);
  EXPECT_EQ(j["id"], 7);
  EXPECT_EQ(j["fetched_at"], "2021-01-01T00:00:00Z");
  EXPECT_EQ(j["classification"]["kind"], "ROOT_MEMENTO");
}

TEST(App, HistoryIsBoundedNewestFirst) {
  auto transport = std::make_shared<FixtureTransport>(http_fixtures());
  AppOptions opts;
  opts.history_limit = 3;
  App app(in_memory_config(), transport, fixed_clock(make_instant(2021, 1, 1)), opts);
  const char* urls[] = {"https://example.com/", "https://www.cs.odu.edu/~amabe/test.html",
                        "https://www.cs.odu.edu/~amabe/oneiframe.html",
                        "https://web.archive.org/web/20100412125057/http://www.mitre.org/"};
  for (const char* u : urls) app.analyze({u});
  const auto hist = app.analyses();
  ASSERT_EQ(hist.size(), 3u);
  EXPECT_EQ(hist[0]->id, 4u);
  EXPECT_EQ(hist[2]->id, 2u);
  EXPECT_EQ(app.analysis(4)->url, urls[3]);
  EXPECT_EQ(app.analysis(1), nullptr);
}

TEST(App, AnalyzeValidation) {
  App app(in_memory_config(), std::make_shared<FixtureTransport>(http_fixtures()));
  EXPECT_EQ(code_of([&] { app.analyze({"ftp://x/"}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { app.analyze({""}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { app.analyze({"https://example.com/", 0}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { app.analyze({"https://unreachable.example/"}); }), ErrorCode::kRootFetchFailed);
  EXPECT_TRUE(app.analyses().empty());
}

TEST(App, MaxDepthOverride) {
  App app(in_memory_config(), std::make_shared<FixtureTransport>(http_fixtures()));
  auto r = app.analyze({"https://cycle.example/a.html", 1});
  EXPECT_EQ(r->tree.max_depth(), 1);
}
