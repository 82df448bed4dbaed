#include "mementoscope/core/messages.hpp"

namespace mementoscope {

std::optional<std::string> badge_text(const PageClassification& c) {
  switch (c.kind) {
    case PageKind::kLive:
      return std::nullopt;
    case PageKind::kRootMemento:
    case PageKind::kPromotedIframeMemento: {
      const auto& dt = c.state.memento_datetime;
      if (!dt) return std::nullopt;
      // An unparseable header still marks a memento; show what the archive sent.
      return dt->instant ? format_ymd(*dt->instant) : dt->raw;
    }
    case PageKind::kMixedLiveArchival:
      return std::string(messages::kMixedBadge);
    case PageKind::kZombieMemento:
      return std::string(messages::kZombieBadge);
  }
  return std::nullopt;
}

std::vector<std::string> popup_lines(const PageClassification& c) {
  std::vector<std::string> lines;
  if (c.kind == PageKind::kLive) return lines;

  const auto& state = c.state;
  if (state.memento_datetime) {
    lines.push_back(messages::kMementoCapturedOn + state.memento_datetime->raw);
  } else if (!state.memento_dates.empty()) {
    lines.emplace_back(messages::kMixedHeader);
    for (const auto& dt : state.memento_dates) lines.push_back(dt.raw);
  }
  if (state.mixed_memento_live_web) lines.emplace_back(messages::kLiveLeakWarning);
  return lines;
}

}  // namespace mementoscope
