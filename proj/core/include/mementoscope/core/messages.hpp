#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mementoscope/core/classify.hpp"

namespace mementoscope::messages {

inline constexpr const char* kMementoCapturedOn = "The page displayed is a memento captured on ";
inline constexpr const char* kMixedHeader = "The page displayed contains archived content captured on:";
inline constexpr const char* kLiveLeakWarning =
    "This memento is displaying content from the live web";
inline constexpr const char* kMixedBadge = "Mixed archival content";
inline constexpr const char* kZombieBadge = "Memento + live content";

}  // namespace mementoscope::messages

namespace mementoscope {

// Short text shown beside the memento icon; empty for live pages.
std::optional<std::string> badge_text(const PageClassification& c);

// Lines of the memento info popup, top to bottom.
std::vector<std::string> popup_lines(const PageClassification& c);

}  // namespace mementoscope
