#include "mementoscope/core/classify.hpp"

#include "mementoscope/url.hpp"

namespace mementoscope {

std::string_view page_kind_name(PageKind k) {
  switch (k) {
    case PageKind::kLive: return "LIVE";
    case PageKind::kRootMemento: return "ROOT_MEMENTO";
    case PageKind::kPromotedIframeMemento: return "PROMOTED_IFRAME_MEMENTO";
    case PageKind::kMixedLiveArchival: return "MIXED_LIVE_ARCHIVAL";
    case PageKind::kZombieMemento: return "ZOMBIE_MEMENTO";
  }
  return "LIVE";
}

std::optional<PageKind> page_kind_from_name(std::string_view name) {
  for (auto k : {PageKind::kLive, PageKind::kRootMemento, PageKind::kPromotedIframeMemento,
                 PageKind::kMixedLiveArchival, PageKind::kZombieMemento}) {
    if (page_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

struct Scan {
  bool leaks_live_web = false;
  std::vector<DeepDate> deep_dates;
};

void scan(const FrameNode& node, Scan& out) {
  if (node.depth >= 2 && node.memento_datetime) {
    out.deep_dates.push_back({node.url, *node.memento_datetime});
  }
  for (const auto& child : node.children) {
    if (node.has_datetime() && child.fetched_ok() && !child.has_datetime()) {
      out.leaks_live_web = true;
    }
    scan(child, out);
  }
}

bool hosted_by_iframe_archive(const FrameNode& frame, const std::vector<KnownArchive>& archives) {
  for (const auto* url : {&frame.url, &frame.final_url}) {
    const std::string host = url_host(*url);
    if (host.empty()) continue;
    for (const auto& a : archives) {
      if (a.iframe_display && a.matches_host(host)) return true;
    }
  }
  return false;
}

}  // namespace

PageClassification classify_tree(const FrameTree& tree, const std::vector<KnownArchive>& archives) {
  PageClassification out;
  const FrameNode& root = tree.root;

  Scan found;
  scan(root, found);
  out.deep_dates = std::move(found.deep_dates);

  const FrameNode* only_dated_frame = nullptr;
  std::size_t dated_frames = 0;
  for (const auto& frame : root.children) {
    if (!frame.memento_datetime) continue;
    out.state.memento_dates.push_back(*frame.memento_datetime);
    only_dated_frame = &frame;
    ++dated_frames;
  }

  MementoState& state = out.state;
  if (root.memento_datetime) {
    state.memento_datetime = root.memento_datetime;
    out.kind = PageKind::kRootMemento;
  } else if (dated_frames == 1 && hosted_by_iframe_archive(*only_dated_frame, archives)) {
    state.memento_datetime = only_dated_frame->memento_datetime;
    out.kind = PageKind::kPromotedIframeMemento;
  } else if (dated_frames > 0) {
    out.kind = PageKind::kMixedLiveArchival;
  } else {
    out.kind = PageKind::kLive;
  }

  if (found.leaks_live_web) {
    state.mixed_memento_live_web = true;
    out.kind = PageKind::kZombieMemento;
  }
  state.memento_info = out.kind != PageKind::kLive;
  return out;
}

std::optional<std::string> check_classification_invariants(const PageClassification& c) {
  const MementoState& s = c.state;
  if (s.memento_datetime && !s.memento_info) return std::string("datetime without memento_info");
  if (!s.memento_dates.empty() && !s.memento_info) {
    return std::string("memento_dates without memento_info");
  }
  if (s.mixed_memento_live_web && !s.memento_info) {
    return std::string("mixed_memento_live_web without memento_info");
  }
  if ((c.kind == PageKind::kLive) != !s.memento_info) {
    return std::string("LIVE must coincide with memento_info=false");
  }
  if ((c.kind == PageKind::kZombieMemento) != s.mixed_memento_live_web) {
    return std::string("ZOMBIE_MEMENTO must coincide with mixed_memento_live_web");
  }
  if ((c.kind == PageKind::kRootMemento || c.kind == PageKind::kPromotedIframeMemento) &&
      !s.memento_datetime) {
    return std::string("memento kind without memento_datetime");
  }
  if (c.kind == PageKind::kMixedLiveArchival && (s.memento_datetime || s.memento_dates.empty())) {
    return std::string("MIXED_LIVE_ARCHIVAL needs dates and no page datetime");
  }
  return std::nullopt;
}

}  // namespace mementoscope
