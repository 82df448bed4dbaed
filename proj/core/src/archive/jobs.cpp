#include "mementoscope/archive/jobs.hpp"

#include "mementoscope/error.hpp"
#include "mementoscope/url.hpp"

namespace mementoscope {

std::string_view job_status_name(JobStatus s) {
  switch (s) {
    case JobStatus::kPending: return "PENDING";
    case JobStatus::kRunning: return "RUNNING";
    case JobStatus::kDone: return "DONE";
    case JobStatus::kFailed: return "FAILED";
  }
  return "PENDING";
}

JobManager::JobManager(Submitter submitter, int workers, Clock clock)
    : submitter_(std::move(submitter)), clock_(std::move(clock)) {
  for (int i = 0; i < std::max(workers, 1); ++i) {
    workers_.emplace_back([this](std::stop_token stop) { run_worker(stop); });
  }
}

JobManager::~JobManager() {
  for (auto& w : workers_) w.request_stop();
  work_cv_.notify_all();
  workers_.clear();
}

ArchiveJob JobManager::submit(const KnownArchive& archive, std::string url, Completion on_done) {
  const auto parsed = parse_url(url);
  if (!parsed || !parsed->is_http()) {
    throw Error(ErrorCode::kInvalidArgument, "'" + url + "' is not an http(s) URL");
  }
  if (!archive.submit) {
    throw Error(ErrorCode::kInvalidArgument, "archive '" + archive.id + "' accepts no submissions");
  }
  ArchiveJob job;
  {
    std::lock_guard lock(mutex_);
    job.id = next_id_++;
    job.archive_id = archive.id;
    job.target_url = std::move(url);
    job.submitted_at = clock_();
    job.status = JobStatus::kPending;
    jobs_[job.id] = job;
    settled_[job.id] = false;
    queue_.push_back(Task{job.id, archive, std::move(on_done)});
  }
  work_cv_.notify_one();
  return job;
}

void JobManager::run_worker(std::stop_token stop) {
  for (;;) {
    Task task;
    std::string url;
    {
      std::unique_lock lock(mutex_);
      if (!work_cv_.wait(lock, stop, [&] { return !queue_.empty(); })) return;
      task = std::move(queue_.front());
      queue_.pop_front();
      auto& job = jobs_.at(task.id);
      job.status = JobStatus::kRunning;
      url = job.target_url;
    }

    SubmissionResult result;
    try {
      result = submitter_(task.archive, url);
    } catch (const std::exception& e) {
      result.error = e.what();
    }

    ArchiveJob finished;
    {
      std::lock_guard lock(mutex_);
      auto& job = jobs_.at(task.id);
      job.completed_at = std::max(clock_(), job.submitted_at);
      if (result.ok()) {
        job.status = JobStatus::kDone;
        job.result_url = result.memento_url;
      } else {
        job.status = JobStatus::kFailed;
        job.error = result.error;
      }
      finished = job;
    }
    if (task.on_done) {
      try {
        task.on_done(finished);
      } catch (...) {
        // Completion hooks report their own failures.
      }
    }
    {
      std::lock_guard lock(mutex_);
      settled_[task.id] = true;
    }
    done_cv_.notify_all();
  }
}

std::optional<ArchiveJob> JobManager::get(JobId id) const {
  std::lock_guard lock(mutex_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return std::nullopt;
  return it->second;
}

std::vector<ArchiveJob> JobManager::list() const {
  std::lock_guard lock(mutex_);
  std::vector<ArchiveJob> out;
  out.reserve(jobs_.size());
  for (const auto& [id, job] : jobs_) out.push_back(job);
  return out;
}

std::optional<ArchiveJob> JobManager::wait(JobId id, std::chrono::milliseconds timeout) {
  std::unique_lock lock(mutex_);
  if (!jobs_.count(id)) return std::nullopt;
  done_cv_.wait_for(lock, timeout, [&] { return settled_[id]; });
  return jobs_.at(id);
}

bool JobManager::wait_all(std::chrono::milliseconds timeout) {
  std::unique_lock lock(mutex_);
  return done_cv_.wait_for(lock, timeout, [&] {
    for (const auto& [id, settled] : settled_) {
      if (!settled) return false;
    }
    return true;
  });
}

}  // namespace mementoscope
