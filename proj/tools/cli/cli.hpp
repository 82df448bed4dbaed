#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mementoscope/core/clock.hpp"
#include "mementoscope/fetch/http.hpp"
#include "mementoscope/service/config.hpp"

namespace mementoscope::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

struct Context {
  AppConfig config;
  std::shared_ptr<HttpTransport> transport;
  Clock clock = system_now;
  bool fixtures = false;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

struct AnalyzeArgs {
  std::string url;
  std::optional<int> max_depth;
  bool resources = false;
  bool json = false;
};

struct BookmarkArgs {
  std::string url;
  std::string archive;
  std::optional<std::string> title;
  std::optional<int> offset;
  bool wait = false;
};

struct TimemapEvalArgs {
  std::string source;
  std::string offsets = "30,60,120";
  std::optional<std::string> range;
  int step = 1;
};

struct ServeArgs {
  std::optional<std::string> listen;
};

int run_analyze(Context& ctx, const AnalyzeArgs& args);
int run_bookmark(Context& ctx, const BookmarkArgs& args);
int run_timemap_eval(Context& ctx, const TimemapEvalArgs& args);
int run_serve(Context& ctx, const ServeArgs& args);

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mementoscope::cli
