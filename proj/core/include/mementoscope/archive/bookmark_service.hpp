#pragma once

#include <condition_variable>
#include <deque>
#include <filesystem>
#include <functional>
#include <future>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mementoscope/archive/bookmark_archive.hpp"
#include "mementoscope/archive/bookmarks.hpp"
#include "mementoscope/archive/jobs.hpp"
#include "mementoscope/core/clock.hpp"
#include "mementoscope/core/known_archive.hpp"

namespace mementoscope {

struct BookmarkServiceOptions {
  std::filesystem::path store_path;  // empty: keep the store in memory
  std::filesystem::path log_path;    // empty: no archive log
  std::vector<KnownArchive> archives;
  int default_offset_seconds = 30;
  int job_workers = 2;
};

struct BookmarkOutcome {
  BookmarkMutation mutation;
  std::optional<ArchiveJob> job;
};

/// Bookmark store behind a single writer thread.
///
/// Every mutation is queued and applied in order to a private copy, saved,
/// then published as a new immutable snapshot. Readers only ever see
/// published snapshots. Finished archive jobs append to the archive log and
/// queue an update of their archive node.
class BookmarkService {
 public:
  using Mutation = std::function<void(BookmarkStore&)>;

  BookmarkService(BookmarkServiceOptions options, JobManager::Submitter submitter,
                  Clock clock = system_now);
  ~BookmarkService();

  BookmarkService(const BookmarkService&) = delete;
  BookmarkService& operator=(const BookmarkService&) = delete;

  std::shared_ptr<const BookmarkStore> snapshot() const;

  // Blocks until the mutation has been applied and persisted; rethrows
  // whatever the mutation or the save threw (the store is then unchanged).
  void mutate(Mutation m);

  BookmarkOutcome bookmark(const std::string& url, const std::optional<std::string>& title,
                           BookmarkNodeType choice, std::optional<int> offset_seconds = {});

  JobManager& jobs() { return *jobs_; }
  const JobManager& jobs() const { return *jobs_; }
  const std::vector<KnownArchive>& archives() const { return options_.archives; }

 private:
  struct Pending {
    Mutation mutation;
    std::promise<void> done;
  };

  std::future<void> enqueue(Mutation m);
  void run_writer(std::stop_token stop);
  void on_job_done(const ArchiveJob& job, BookmarkId node, const std::string& original_url);

  BookmarkServiceOptions options_;
  Clock clock_;

  mutable std::mutex snapshot_mutex_;
  std::shared_ptr<const BookmarkStore> snapshot_;

  std::mutex queue_mutex_;
  std::condition_variable_any queue_cv_;
  std::deque<Pending> queue_;
  std::jthread writer_;

  // Declared last so its workers stop before the writer does.
  std::unique_ptr<JobManager> jobs_;
};

}  // namespace mementoscope
