#include <gtest/gtest.h>

#include <atomic>
#include <thread>

#include "mementoscope/archive/jobs.hpp"
#include "mementoscope/archive/submit.hpp"
#include "mementoscope/error.hpp"
#include "mementoscope/fetch/fixture_transport.hpp"
#include "mementoscope/fetch/live_transport.hpp"
#include "mock_archive.hpp"

using namespace mementoscope;
using namespace mementoscope::testing;
using namespace std::chrono_literals;

namespace {

const KnownArchive& in(const std::vector<KnownArchive>& list, std::string_view id) {
  return *find_archive_by_id(list, id);
}

SubmitOptions quick() {
  SubmitOptions o;
  o.timeout = 5s;
  return o;
}

}  // namespace

TEST(SubmitCapture, WaybackContentLocation) {
  MockArchive mock;
  LiveTransport live;
  auto r = submit_capture(live, in(mock.archives(), archive_ids::kInternetArchive), "https://example.com/", quick());
  ASSERT_TRUE(r.ok()) << r.error;
  EXPECT_EQ(*r.memento_url, mock.base() + "/web/20200304150101/https://example.com/");
  EXPECT_EQ(mock.submitted_urls(), std::vector<std::string>{"https://example.com/"});
}

TEST(SubmitCapture, ArchiveTodayFollowsRedirect) {
  MockArchive mock;
  LiveTransport live;
  auto r = submit_capture(live, in(mock.archives(), archive_ids::kArchiveToday),
                          "https://example.com/a b?x=1&y=2", quick());
  ASSERT_TRUE(r.ok()) << r.error;
  EXPECT_EQ(*r.memento_url, mock.base() + "/Mk1");
  EXPECT_EQ(mock.submitted_urls(), std::vector<std::string>{"https://example.com/a b?x=1&y=2"});
}

TEST(SubmitCapture, MegalodonRefresh) {
  MockArchive mock;
  LiveTransport live;
  auto r = submit_capture(live, in(mock.archives(), archive_ids::kMegalodon), "https://example.com/", quick());
  ASSERT_TRUE(r.ok()) << r.error;
  EXPECT_EQ(*r.memento_url, mock.base() + "/ref/1");
}

TEST(SubmitCapture, ServerErrorFails) {
  MockArchive mock;
  mock.fail_with(503);
  LiveTransport live;
  auto r = submit_capture(live, in(mock.archives(), archive_ids::kInternetArchive), "https://example.com/", quick());
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.error.find("503"), std::string::npos) << r.error;
}

TEST(SubmitCapture, UnreachableEndpoint) {
  auto archives = default_known_archives();
  for (auto& a : archives) {
    if (a.submit) a.submit->url = "http://127.0.0.1:1/save/";
  }
  LiveTransport live;
  auto r = submit_capture(live, in(archives, archive_ids::kInternetArchive), "https://example.com/", quick());
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.error.rfind("NETWORK_ERROR", 0), 0u) << r.error;
}

TEST(SubmitCapture, FromFixtures) {
  FixtureTransport t;
  t.add_response("GET", "https://web.archive.org/save/https://example.com/", 200,
                 {{"Content-Location", "/web/20200304150000/https://example.com/"}});
  auto archives = default_known_archives();
  auto r = submit_capture(t, in(archives, archive_ids::kInternetArchive), "https://example.com/", quick());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(*r.memento_url, "https://web.archive.org/web/20200304150000/https://example.com/");

  // An answer that names no memento is a failure.
  t.add_response("POST", "https://archive.is/submit/", 200, {});
  auto silent = submit_capture(t, in(archives, archive_ids::kArchiveToday), "https://example.com/", quick());
  EXPECT_FALSE(silent.ok());
}

TEST(JobManager, DoneWithResult) {
  MockArchive mock;
  auto live = std::make_shared<LiveTransport>();
  JobManager jobs([&](const KnownArchive& a, const std::string& url) { return submit_capture(*live, a, url, quick()); });
  const auto archives = mock.archives();
  auto job = jobs.submit(in(archives, archive_ids::kArchiveToday), "https://example.com/");
  EXPECT_EQ(job.status, JobStatus::kPending);
  EXPECT_FALSE(job.result_url);
  auto done = jobs.wait(job.id, 5s);
  ASSERT_TRUE(done);
  EXPECT_EQ(done->status, JobStatus::kDone);
  EXPECT_EQ(done->result_url, mock.base() + "/Mk1");
  EXPECT_FALSE(done->error);
  ASSERT_TRUE(done->completed_at);
  EXPECT_LE(done->submitted_at, *done->completed_at);
}

TEST(JobManager, FailedOnServerError) {
  MockArchive mock;
  mock.fail_with(500);
  LiveTransport live;
  JobManager jobs([&](const KnownArchive& a, const std::string& url) { return submit_capture(live, a, url, quick()); });
  auto job = jobs.submit(in(mock.archives(), archive_ids::kInternetArchive), "https://example.com/");
  auto done = jobs.wait(job.id, 5s);
  ASSERT_TRUE(done);
  EXPECT_EQ(done->status, JobStatus::kFailed);
  EXPECT_FALSE(done->result_url);
  ASSERT_TRUE(done->error);
}

TEST(JobManager, FailedOnNetworkError) {
  FixtureTransport empty;
  JobManager jobs([&](const KnownArchive& a, const std::string& url) { return submit_capture(empty, a, url, quick()); });
  const auto archives = default_known_archives();
  auto job = jobs.submit(in(archives, archive_ids::kMegalodon), "https://example.com/");
  auto done = jobs.wait(job.id, 5s);
  ASSERT_TRUE(done);
  EXPECT_EQ(done->status, JobStatus::kFailed);
  EXPECT_EQ(done->error->rfind("NETWORK_ERROR", 0), 0u) << *done->error;
}

TEST(JobManager, SubmitReturnsBeforeArchiveAnswers) {
  MockArchive mock;
  mock.hold();
  LiveTransport live;
  JobManager jobs([&](const KnownArchive& a, const std::string& url) { return submit_capture(live, a, url, quick()); });
  auto job = jobs.submit(in(mock.archives(), archive_ids::kInternetArchive), "https://example.com/");
  EXPECT_EQ(job.status, JobStatus::kPending);
  std::this_thread::sleep_for(100ms);
  auto mid = jobs.get(job.id);
  ASSERT_TRUE(mid);
  EXPECT_FALSE(mid->finished());
  EXPECT_FALSE(jobs.wait(job.id, 50ms)->finished());
  mock.release();
  auto done = jobs.wait(job.id, 5s);
  ASSERT_TRUE(done);
  EXPECT_EQ(done->status, JobStatus::kDone);
}

TEST(JobManager, RejectsMalformedInput) {
  JobManager jobs([](const KnownArchive&, const std::string&) { return SubmissionResult{}; });
  const auto archives = default_known_archives();
  EXPECT_THROW(jobs.submit(in(archives, archive_ids::kInternetArchive), "ftp://example.com/"), Error);
  EXPECT_THROW(jobs.submit(in(archives, archive_ids::kInternetArchive), "not a url"), Error);
  EXPECT_THROW(jobs.submit(in(archives, archive_ids::kTrove), "https://example.com/"), Error);
  EXPECT_TRUE(jobs.list().empty());
}

TEST(JobManager, ManyJobsAllSettleWithCallbacks) {
  std::atomic<int> calls{0};
  std::atomic<int> callbacks{0};
  JobManager jobs(
      [&](const KnownArchive&, const std::string& url) {
        ++calls;
        SubmissionResult r;
        if (url.back() == '3') {
          r.error = "refused";
        } else {
          r.memento_url = "https://m.example/" + url.substr(url.size() - 2);
        }
        return r;
      },
      4, fixed_clock(make_instant(2020, 3, 4)));
  const auto archives = default_known_archives();
  std::vector<JobId> ids;
  for (int i = 10; i < 60; ++i) {
    ids.push_back(jobs.submit(in(archives, archive_ids::kInternetArchive), "https://x.example/" + std::to_string(i),
                              [&](const ArchiveJob&) { ++callbacks; })
                      .id);
  }
  ASSERT_TRUE(jobs.wait_all(10s));
  EXPECT_EQ(calls.load(), 50);
  EXPECT_EQ(callbacks.load(), 50);
  const auto all = jobs.list();
  ASSERT_EQ(all.size(), 50u);
  for (const auto& j : all) {
    ASSERT_TRUE(j.finished());
    EXPECT_EQ(j.status == JobStatus::kDone, j.result_url.has_value());
    EXPECT_EQ(j.status == JobStatus::kFailed, j.target_url.back() == '3');
  }
  // Ids are assigned in submission order.
  for (std::size_t i = 1; i < ids.size(); ++i) EXPECT_EQ(ids[i], ids[i - 1] + 1);
}

TEST(JobManager, UnknownId) {
  JobManager jobs([](const KnownArchive&, const std::string&) { return SubmissionResult{}; });
  EXPECT_FALSE(jobs.get(77));
  EXPECT_FALSE(jobs.wait(77, 10ms));
  EXPECT_EQ(job_status_name(JobStatus::kRunning), "RUNNING");
}
