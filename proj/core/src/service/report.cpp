#include "mementoscope/service/report.hpp"

#include "mementoscope/core/messages.hpp"

namespace mementoscope {

AnalysisReport make_report(std::uint64_t id, std::string url, Instant fetched_at, FrameTree tree,
                           const std::vector<KnownArchive>& archives,
                           std::optional<std::vector<ResourceDatetime>> resources) {
  AnalysisReport r;
  r.id = id;
  r.url = std::move(url);
  r.fetched_at = fetched_at;
  r.classification = classify_tree(tree, archives);
  r.badge = badge_text(r.classification);
  r.popup = popup_lines(r.classification);
  r.tree = std::move(tree);
  r.resource_datetimes = std::move(resources);
  return r;
}

AnalysisReport analyze_url(HttpTransport& transport, const std::string& url, const FetchConfig& cfg,
                           const std::vector<KnownArchive>& archives, bool with_resources,
                           std::uint64_t id, Instant fetched_at) {
  PageFetch page = fetch_page(transport, url, cfg);
  std::optional<std::vector<ResourceDatetime>> resources;
  if (with_resources) {
    FetchConfig sub = cfg;
    sub.fetch_subresources = true;
    resources = collect_subresource_datetimes(transport, page.documents, sub).entries;
  }
  return make_report(id, url, fetched_at, std::move(page.tree), archives, std::move(resources));
}

Json report_to_json(const AnalysisReport& r) {
  return Json{
      {"id", r.id},
      {"url", r.url},
      {"fetched_at", format_iso8601(r.fetched_at)},
      {"classification", classification_to_json(r.classification)},
      {"badge", r.badge ? Json(*r.badge) : Json(nullptr)},
      {"popup", r.popup},
      {"tree", frame_tree_to_json(r.tree)},
      {"resource_datetimes",
       r.resource_datetimes ? resource_datetimes_to_json(*r.resource_datetimes) : Json(nullptr)},
  };
}

}  // namespace mementoscope
