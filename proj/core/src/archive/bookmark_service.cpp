#include "mementoscope/archive/bookmark_service.hpp"

#include <iostream>

#include "mementoscope/archive/archive_log.hpp"
#include "mementoscope/archive/bookmark_codec.hpp"
#include "mementoscope/error.hpp"

namespace mementoscope {

BookmarkService::BookmarkService(BookmarkServiceOptions options, JobManager::Submitter submitter,
                                 Clock clock)
    : options_(std::move(options)), clock_(std::move(clock)) {
  BookmarkStore initial = options_.store_path.empty() ? BookmarkStore::fresh(clock_())
                                                      : load_store(options_.store_path, clock_());
  initial.mark_clean();
  snapshot_ = std::make_shared<const BookmarkStore>(std::move(initial));
  writer_ = std::jthread([this](std::stop_token stop) { run_writer(stop); });
  jobs_ = std::make_unique<JobManager>(std::move(submitter), options_.job_workers, clock_);
}

BookmarkService::~BookmarkService() {
  jobs_.reset();
  writer_.request_stop();
  queue_cv_.notify_all();
  if (writer_.joinable()) writer_.join();
}

std::shared_ptr<const BookmarkStore> BookmarkService::snapshot() const {
  std::lock_guard lock(snapshot_mutex_);
  return snapshot_;
}

std::future<void> BookmarkService::enqueue(Mutation m) {
  Pending p{std::move(m), {}};
  auto fut = p.done.get_future();
  {
    std::lock_guard lock(queue_mutex_);
    queue_.push_back(std::move(p));
  }
  queue_cv_.notify_one();
  return fut;
}

void BookmarkService::mutate(Mutation m) { enqueue(std::move(m)).get(); }

void BookmarkService::run_writer(std::stop_token stop) {
  for (;;) {
    Pending p;
    {
      std::unique_lock lock(queue_mutex_);
      if (!queue_cv_.wait(lock, stop, [&] { return !queue_.empty(); })) break;
      p = std::move(queue_.front());
      queue_.pop_front();
    }
    try {
      BookmarkStore working = *snapshot();
      p.mutation(working);
      if (working.dirty()) {
        if (!options_.store_path.empty()) save_store(working, options_.store_path);
        working.mark_clean();
        auto next = std::make_shared<const BookmarkStore>(std::move(working));
        std::lock_guard lock(snapshot_mutex_);
        snapshot_ = std::move(next);
      }
      p.done.set_value();
    } catch (...) {
      p.done.set_exception(std::current_exception());
    }
  }
  // Anything still queued at shutdown is refused rather than left hanging.
  std::lock_guard lock(queue_mutex_);
  for (auto& p : queue_) {
    p.done.set_exception(std::make_exception_ptr(
        Error(ErrorCode::kStoreConflict, "bookmark service is shutting down")));
  }
  queue_.clear();
}

BookmarkOutcome BookmarkService::bookmark(const std::string& url,
                                          const std::optional<std::string>& title,
                                          BookmarkNodeType choice,
                                          std::optional<int> offset_seconds) {
  if (choice != BookmarkNodeType::kNoArchive && archive_id_for_choice(choice).empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "'" + std::string(bookmark_node_type_name(choice)) + "' is not an archive choice");
  }
  const int offset = offset_seconds.value_or(options_.default_offset_seconds);
  const KnownArchive* archive = nullptr;
  if (choice != BookmarkNodeType::kNoArchive) {
    archive = find_archive_by_id(options_.archives, archive_id_for_choice(choice));
    if (!archive) {
      throw Error(ErrorCode::kInvalidConfig,
                  "no archive '" + std::string(archive_id_for_choice(choice)) + "' configured");
    }
    if (!archive->submit) {
      throw Error(ErrorCode::kInvalidConfig, "archive '" + archive->id + "' has no submission endpoint");
    }
  }

  BookmarkOutcome out;
  const Instant now = clock_();
  mutate([&](BookmarkStore& store) {
    out.mutation = bookmark_with_archive(store, options_.archives, url, title, choice, now, offset);
  });

  if (archive && out.mutation.archive_node) {
    const BookmarkId node = *out.mutation.archive_node;
    out.job = jobs_->submit(*archive, url, [this, node, url](const ArchiveJob& job) {
      on_job_done(job, node, url);
    });
  }
  return out;
}

void BookmarkService::on_job_done(const ArchiveJob& job, BookmarkId node,
                                  const std::string& original_url) {
  if (job.status != JobStatus::kDone || !job.result_url) return;
  if (!options_.log_path.empty()) {
    try {
      append_archive_log(options_.log_path, *job.result_url);
    } catch (const std::exception& e) {
      std::cerr << "archive log: " << e.what() << "\n";
    }
  }
  const KnownArchive* archive = find_archive_by_id(options_.archives, job.archive_id);
  if (!archive) return;
  const KnownArchive a = *archive;
  const std::string memento = *job.result_url;
  const Instant completed = job.completed_at.value_or(job.submitted_at);
  try {
    mutate([&](BookmarkStore& store) {
      apply_archive_result(store, a, node, original_url, memento, completed);
    });
  } catch (const std::exception& e) {
    std::cerr << "job " << job.id << ": " << e.what() << "\n";
  }
}

}  // namespace mementoscope
