#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mementoscope/archive/bookmark_service.hpp"
#include "mementoscope/archive/submit.hpp"
#include "mementoscope/core/clock.hpp"
#include "mementoscope/fetch/http.hpp"
#include "mementoscope/service/config.hpp"
#include "mementoscope/service/report.hpp"

namespace mementoscope {

struct AnalyzeRequest {
  std::string url;
  std::optional<int> max_depth;
  bool resources = false;
};

struct AppOptions {
  std::size_t history_limit = 100;
  int job_workers = 2;
  SubmitOptions submit;
};

/// Everything `serve` holds: config, analysis history, bookmark store and
/// archive jobs. Analyses and bookmark work never wait on each other.
class App {
 public:
  App(AppConfig config, std::shared_ptr<HttpTransport> transport, Clock clock = system_now,
      AppOptions options = {});

  const AppConfig& config() const { return config_; }

  // Throws Error(kInvalidArgument) for a bad request and
  // Error(kRootFetchFailed) when the page cannot be fetched.
  std::shared_ptr<const AnalysisReport> analyze(const AnalyzeRequest& req);

  // Newest first.
  std::vector<std::shared_ptr<const AnalysisReport>> analyses() const;
  std::shared_ptr<const AnalysisReport> analysis(std::uint64_t id) const;

  BookmarkService& bookmarks() { return *bookmarks_; }

 private:
  AppConfig config_;
  std::shared_ptr<HttpTransport> transport_;
  Clock clock_;
  AppOptions options_;

  mutable std::mutex history_mutex_;
  std::deque<std::shared_ptr<const AnalysisReport>> history_;
  std::uint64_t next_report_id_ = 1;

  std::unique_ptr<BookmarkService> bookmarks_;
};

}  // namespace mementoscope
