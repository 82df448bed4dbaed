#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mementoscope {

inline constexpr const char* kDefaultArchiveLogName = "archive_urls.txt";

// Appends `memento_url` plus LF. Writers in this process are serialized and
// each line goes out in a single append, so concurrent completions never
// interleave. Throws Error(kIoError).
void append_archive_log(const std::filesystem::path& path, std::string_view memento_url);

// Lines of the log; empty when the file does not exist.
std::vector<std::string> read_archive_log(const std::filesystem::path& path);

}  // namespace mementoscope
