#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mementoscope/core/datetime.hpp"
#include "mementoscope/core/frame_tree.hpp"
#include "mementoscope/core/known_archive.hpp"

namespace mementoscope {

// Page-level memento flags, the analog of the browser's per-entry state.
struct MementoState {
  bool memento_info = false;
  std::optional<MementoDatetime> memento_datetime;
  std::vector<MementoDatetime> memento_dates;
  bool mixed_memento_live_web = false;

  friend bool operator==(const MementoState&, const MementoState&) = default;
};

enum class PageKind {
  kLive,
  kRootMemento,
  kPromotedIframeMemento,
  kMixedLiveArchival,
  kZombieMemento,
};

std::string_view page_kind_name(PageKind k);
std::optional<PageKind> page_kind_from_name(std::string_view name);

struct DeepDate {
  std::string url;
  MementoDatetime datetime;

  friend bool operator==(const DeepDate&, const DeepDate&) = default;
};

struct PageClassification {
  PageKind kind = PageKind::kLive;
  MementoState state;
  // Memento frames at depth >= 2. Reported, never used for `kind`.
  std::vector<DeepDate> deep_dates;

  friend bool operator==(const PageClassification&, const PageClassification&) = default;
};

/// Classifies a fetched frame tree.
///
/// Rules, in order:
///  - A node carrying a datetime whose successfully fetched child carries
///    none leaks the live web: the page is a zombie, whatever else holds.
///  - A dated root is a memento; the root's datetime is the page datetime.
///  - Under an undated root, a single dated depth-1 frame hosted by an
///    archive that shows captures inside an iframe is promoted to page
///    memento.
///  - Any other dated depth-1 frames make the page mixed live/archival.
///
/// Only depth-1 frames contribute to `memento_dates` (document order,
/// duplicates kept). Frames with a transport error or a non-2xx status are
/// neutral for the zombie check.
PageClassification classify_tree(const FrameTree& tree, const std::vector<KnownArchive>& archives);

// Empty when the MementoState and kind invariants hold; otherwise the first
// violated rule.
std::optional<std::string> check_classification_invariants(const PageClassification& c);

}  // namespace mementoscope
