#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mementoscope/archive/submit.hpp"
#include "mementoscope/core/clock.hpp"
#include "mementoscope/core/known_archive.hpp"

namespace mementoscope {

enum class JobStatus { kPending, kRunning, kDone, kFailed };

std::string_view job_status_name(JobStatus s);

using JobId = std::uint64_t;

struct ArchiveJob {
  JobId id = 0;
  std::string archive_id;
  std::string target_url;
  Instant submitted_at{};
  std::optional<Instant> completed_at;
  JobStatus status = JobStatus::kPending;
  std::optional<std::string> result_url;  // set iff DONE
  std::optional<std::string> error;

  bool finished() const { return status == JobStatus::kDone || status == JobStatus::kFailed; }
};

/// Background archive submissions.
///
/// submit() records a PENDING job and returns immediately; worker threads
/// move it through RUNNING to DONE or FAILED. The completion callback runs
/// on the worker after the job table is updated.
class JobManager {
 public:
  using Submitter = std::function<SubmissionResult(const KnownArchive&, const std::string& url)>;
  using Completion = std::function<void(const ArchiveJob&)>;

  explicit JobManager(Submitter submitter, int workers = 2, Clock clock = system_now);
  ~JobManager();

  JobManager(const JobManager&) = delete;
  JobManager& operator=(const JobManager&) = delete;

  // Throws Error(kInvalidArgument) for a non-http(s) URL or an archive
  // without a submission endpoint.
  ArchiveJob submit(const KnownArchive& archive, std::string url, Completion on_done = {});

  std::optional<ArchiveJob> get(JobId id) const;
  std::vector<ArchiveJob> list() const;

  // Blocks until the job has finished (and its completion callback has
  // returned) or the timeout expires.
  std::optional<ArchiveJob> wait(JobId id, std::chrono::milliseconds timeout);
  bool wait_all(std::chrono::milliseconds timeout);

 private:
  struct Task {
    JobId id;
    KnownArchive archive;
    Completion on_done;
  };

  void run_worker(std::stop_token stop);

  Submitter submitter_;
  Clock clock_;
  mutable std::mutex mutex_;
  std::condition_variable_any work_cv_;
  std::condition_variable done_cv_;
  std::deque<Task> queue_;
  std::map<JobId, ArchiveJob> jobs_;
  std::map<JobId, bool> settled_;  // completion callback has returned
  JobId next_id_ = 1;
  std::vector<std::jthread> workers_;
};

}  // namespace mementoscope
