#include "mementoscope/service/app.hpp"

#include "mementoscope/error.hpp"
#include "mementoscope/url.hpp"

namespace mementoscope {

App::App(AppConfig config, std::shared_ptr<HttpTransport> transport, Clock clock, AppOptions options)
    : config_(std::move(config)),
      transport_(std::move(transport)),
      clock_(std::move(clock)),
      options_(std::move(options)) {
  if (options_.submit.user_agent.empty()) options_.submit.user_agent = config_.fetch.user_agent;

  BookmarkServiceOptions bopts;
  bopts.store_path = config_.store_path;
  bopts.log_path = config_.log_path;
  bopts.archives = config_.known_archives;
  bopts.default_offset_seconds = config_.default_offset_seconds;
  bopts.job_workers = options_.job_workers;

  auto transport_ref = transport_;
  auto submit_opts = options_.submit;
  bookmarks_ = std::make_unique<BookmarkService>(
      std::move(bopts),
      [transport_ref, submit_opts](const KnownArchive& archive, const std::string& url) {
        return submit_capture(*transport_ref, archive, url, submit_opts);
      },
      clock_);
}

std::shared_ptr<const AnalysisReport> App::analyze(const AnalyzeRequest& req) {
  auto parsed = parse_url(req.url);
  if (!parsed || !parsed->is_http()) {
    throw Error(ErrorCode::kInvalidArgument, "'" + req.url + "' is not an absolute http(s) URL");
  }
  FetchConfig cfg = config_.fetch;
  if (req.max_depth) {
    if (*req.max_depth < 1) throw Error(ErrorCode::kInvalidArgument, "max_depth must be positive");
    cfg.max_depth = *req.max_depth;
  }
  const Instant fetched_at = clock_();
  AnalysisReport report = analyze_url(*transport_, req.url, cfg, config_.known_archives,
                                      req.resources, 0, fetched_at);

  std::lock_guard lock(history_mutex_);
  report.id = next_report_id_++;
  auto shared = std::make_shared<const AnalysisReport>(std::move(report));
  history_.push_front(shared);
  while (history_.size() > options_.history_limit) history_.pop_back();
  return shared;
}

std::vector<std::shared_ptr<const AnalysisReport>> App::analyses() const {
  std::lock_guard lock(history_mutex_);
  return {history_.begin(), history_.end()};
}

std::shared_ptr<const AnalysisReport> App::analysis(std::uint64_t id) const {
  std::lock_guard lock(history_mutex_);
  for (const auto& r : history_) {
    if (r->id == id) return r;
  }
  return nullptr;
}

}  // namespace mementoscope
