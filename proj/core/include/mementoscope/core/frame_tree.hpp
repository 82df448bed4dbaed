#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mementoscope/core/datetime.hpp"

namespace mementoscope {

enum class FetchError {
  kTimeout,
  kTooManyRedirects,
  kNetworkError,
  kUnsupportedScheme,
};

std::string_view fetch_error_name(FetchError e);
std::optional<FetchError> fetch_error_from_name(std::string_view name);

struct FrameNode {
  std::string url;
  std::string final_url;
  int depth = 0;
  std::optional<MementoDatetime> memento_datetime;
  std::vector<FrameNode> children;
  int status = 0;
  std::optional<FetchError> fetch_error;
  std::optional<std::string> content_type;

  bool has_datetime() const { return memento_datetime.has_value(); }
  // Fetched without a transport error and answered with a 2xx status.
  bool fetched_ok() const { return !fetch_error && status >= 200 && status < 300; }

  friend bool operator==(const FrameNode&, const FrameNode&) = default;
};

struct FrameTree {
  FrameNode root;

  std::size_t node_count() const;
  int max_depth() const;

  friend bool operator==(const FrameTree&, const FrameTree&) = default;
};

// Checks depth bookkeeping and the ancestor cycle rule. Returns a description
// of the first violation, or std::nullopt for a well-formed tree.
std::optional<std::string> validate_tree(const FrameTree& tree);

}  // namespace mementoscope
