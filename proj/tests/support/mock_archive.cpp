#include "mock_archive.hpp"

#include <httplib.h>

#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace mementoscope::testing {

struct MockArchive::Impl {
  httplib::Server server;
  std::thread thread;
  int port = -1;

  mutable std::mutex mutex;
  std::condition_variable cv;
  int fail_status = 0;
  bool held = false;
  int count = 0;
  std::vector<std::string> urls;

  // Returns the failure status to send, or 0.
  int admit(const std::string& url) {
    std::unique_lock lock(mutex);
    cv.wait(lock, [&] { return !held; });
    ++count;
    urls.push_back(url);
    return fail_status;
  }

  int serial() {
    std::lock_guard lock(mutex);
    return count;
  }
};

MockArchive::MockArchive() : impl_(std::make_unique<Impl>()) {
  auto* impl = impl_.get();

  impl->server.Get(R"(/save/(.+))", [impl](const httplib::Request& req, httplib::Response& res) {
    const std::string url = req.matches[1];
    if (int status = impl->admit(url)) {
      res.status = status;
      res.set_content("capture failed", "text/plain");
      return;
    }
    char ts[32];
    std::snprintf(ts, sizeof ts, "202003041501%02d", impl->serial() % 60);
    res.set_header("Content-Location", "/web/" + std::string(ts) + "/" + url);
    res.set_content("<html><body>saved</body></html>", "text/html");
  });

  impl->server.Post("/submit/", [impl](const httplib::Request& req, httplib::Response& res) {
    const std::string url = req.has_param("url") ? req.get_param_value("url") : "";
    if (url.empty()) {
      res.status = 400;
      return;
    }
    if (int status = impl->admit(url)) {
      res.status = status;
      return;
    }
    res.status = 302;
    res.set_header("Location", "/Mk" + std::to_string(impl->serial()));
  });

  impl->server.Get(R"(/Mk(\d+))", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Memento-Datetime", "Wed, 04 Mar 2020 15:01:00 GMT");
    res.set_content("<html><body>memento</body></html>", "text/html");
  });

  impl->server.Post("/pc/get_simple/decide", [impl](const httplib::Request& req, httplib::Response& res) {
    const std::string url = req.has_param("url") ? req.get_param_value("url") : "";
    if (int status = impl->admit(url)) {
      res.status = status;
      return;
    }
    res.set_header("Refresh", "0;url=/ref/" + std::to_string(impl->serial()));
    res.set_content("<html><body>queued</body></html>", "text/html");
  });

  impl->port = impl->server.bind_to_any_port("127.0.0.1");
  if (impl->port <= 0) throw std::runtime_error("mock archive could not bind");
  impl->thread = std::thread([impl] { impl->server.listen_after_bind(); });
  impl->server.wait_until_ready();
}

MockArchive::~MockArchive() {
  release();
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

std::string MockArchive::base() const { return "http://127.0.0.1:" + std::to_string(impl_->port); }

int MockArchive::port() const { return impl_->port; }

std::vector<KnownArchive> MockArchive::archives() const {
  auto list = default_known_archives();
  for (auto& a : list) {
    if (!a.submit) continue;
    if (a.id == archive_ids::kInternetArchive) a.submit->url = base() + "/save/";
    if (a.id == archive_ids::kArchiveToday) a.submit->url = base() + "/submit/";
    if (a.id == archive_ids::kMegalodon) a.submit->url = base() + "/pc/get_simple/decide";
  }
  return list;
}

void MockArchive::fail_with(int status) {
  std::lock_guard lock(impl_->mutex);
  impl_->fail_status = status;
}

void MockArchive::hold() {
  std::lock_guard lock(impl_->mutex);
  impl_->held = true;
}

void MockArchive::release() {
  {
    std::lock_guard lock(impl_->mutex);
    impl_->held = false;
  }
  impl_->cv.notify_all();
}

int MockArchive::submissions() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->count;
}

std::vector<std::string> MockArchive::submitted_urls() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->urls;
}

}  // namespace mementoscope::testing
