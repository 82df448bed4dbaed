#pragma once

#include <chrono>
#include <functional>

#include "mementoscope/core/datetime.hpp"

namespace mementoscope {

using Clock = std::function<Instant()>;

inline Instant system_now() {
  return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now());
}

inline Clock fixed_clock(Instant t) {
  return [t] { return t; };
}

}  // namespace mementoscope
