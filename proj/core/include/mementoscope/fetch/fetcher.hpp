#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mementoscope/core/datetime.hpp"
#include "mementoscope/core/frame_tree.hpp"
#include "mementoscope/core/headers.hpp"
#include "mementoscope/fetch/http.hpp"

namespace mementoscope {

std::string default_user_agent();

struct FetchConfig {
  int max_depth = 3;
  int max_frames = 64;
  int redirect_limit = 10;
  std::chrono::milliseconds per_request_timeout{20000};
  int concurrency_limit = 8;
  std::string user_agent = default_user_agent();
  bool fetch_subresources = false;
  YearBounds year_bounds;

  friend bool operator==(const FetchConfig&, const FetchConfig&) = default;
};

// Empty when every limit is strictly positive.
std::optional<std::string> validate_fetch_config(const FetchConfig& cfg);

struct ResourceRecord {
  std::string request_url;
  std::optional<std::string> final_url;  // set iff the fetch succeeded
  int status = 0;
  HeaderList headers;
  std::optional<std::string> body;  // HTML documents only
  std::optional<MementoDatetime> memento_datetime;
  std::optional<std::string> content_type;
  std::chrono::milliseconds elapsed{0};
  std::optional<FetchError> error;
  std::string error_message;
  int redirects = 0;

  bool ok() const { return final_url.has_value(); }
};

// Fetches one resource with `method` (GET or HEAD), following redirects.
// Transport failures are recorded in the result, never thrown.
ResourceRecord fetch_resource(HttpTransport& transport, std::string_view url,
                              const FetchConfig& cfg, std::string_view method = "GET");

// Header value -> datetime. An unparseable value is kept as an unparsed
// datetime; an absent header yields std::nullopt.
std::optional<MementoDatetime> memento_datetime_from_headers(const HeaderList& headers,
                                                             YearBounds bounds = {});

struct FetchedDocument {
  std::string url;  // final URL; relative references resolve against it
  std::string body;
};

struct PageFetch {
  FrameTree tree;
  std::vector<FetchedDocument> documents;  // breadth-first, document order
};

/// Breadth-first frame expansion from `url`.
///
/// Node count never exceeds max_frames + 1 and depth never exceeds
/// max_depth. A frame whose URL (before or after redirects) repeats an
/// ancestor's is not expanded. Children keep document order no matter which
/// fetch finishes first. Throws Error(kRootFetchFailed) when the root itself
/// cannot be fetched; child failures are recorded on their nodes.
PageFetch fetch_page(HttpTransport& transport, std::string_view url, const FetchConfig& cfg);

FrameTree build_frame_tree(HttpTransport& transport, std::string_view url, const FetchConfig& cfg);

struct ResourceDatetime {
  std::string url;
  MementoDatetime datetime;

  friend bool operator==(const ResourceDatetime&, const ResourceDatetime&) = default;
};

struct ResourceDatetimes {
  std::vector<ResourceDatetime> entries;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

// Checks img/script/stylesheet references of every fetched document with
// HEAD, falling back to GET when HEAD fails or is refused.
ResourceDatetimes collect_subresource_datetimes(HttpTransport& transport,
                                                const std::vector<FetchedDocument>& documents,
                                                const FetchConfig& cfg);

ResourceDatetimes collect_resource_datetimes(HttpTransport& transport, std::string_view url,
                                             const FetchConfig& cfg);

}  // namespace mementoscope
