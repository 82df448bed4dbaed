#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mementoscope/core/classify.hpp"
#include "mementoscope/core/frame_tree.hpp"
#include "mementoscope/core/known_archive.hpp"
#include "mementoscope/fetch/fetcher.hpp"
#include "mementoscope/service/json_io.hpp"

namespace mementoscope {

struct AnalysisReport {
  std::uint64_t id = 0;
  std::string url;
  Instant fetched_at{};
  PageClassification classification;
  std::optional<std::string> badge;
  std::vector<std::string> popup;
  FrameTree tree;
  std::optional<std::vector<ResourceDatetime>> resource_datetimes;
};

// Classifies `tree` and fills in the badge and popup text.
AnalysisReport make_report(std::uint64_t id, std::string url, Instant fetched_at, FrameTree tree,
                           const std::vector<KnownArchive>& archives,
                           std::optional<std::vector<ResourceDatetime>> resources = {});

/// Fetches, classifies and (with `with_resources`) collects subresource
/// datetimes for `url`. Throws Error(kRootFetchFailed).
AnalysisReport analyze_url(HttpTransport& transport, const std::string& url, const FetchConfig& cfg,
                           const std::vector<KnownArchive>& archives, bool with_resources,
                           std::uint64_t id, Instant fetched_at);

Json report_to_json(const AnalysisReport& r);

}  // namespace mementoscope
