#include "mementoscope/archive/archive_log.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <mutex>

#include "mementoscope/error.hpp"

namespace mementoscope {
namespace {

std::mutex& log_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void append_archive_log(const std::filesystem::path& path, std::string_view memento_url) {
  if (memento_url.find('\n') != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument, "memento URL contains a newline");
  }
  std::string line(memento_url);
  line += '\n';

  std::lock_guard lock(log_mutex());
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string() + ": " + std::strerror(errno));
  }
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t n = ::write(fd, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      const int err = errno;
      ::close(fd);
      throw Error(ErrorCode::kIoError, "write to " + path.string() + ": " + std::strerror(err));
    }
    written += static_cast<std::size_t>(n);
  }
  ::close(fd);
}

std::vector<std::string> read_archive_log(const std::filesystem::path& path) {
  std::vector<std::string> lines;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace mementoscope
