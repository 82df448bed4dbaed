#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mementoscope/core/datetime.hpp"

namespace mementoscope {

struct MementoEntry {
  std::string uri_m;
  MementoDatetime datetime;  // always parsed

  Instant instant() const { return *datetime.instant; }

  friend bool operator==(const MementoEntry&, const MementoEntry&) = default;
};

struct TimeMap {
  std::string original_uri;
  std::vector<MementoEntry> entries;  // ascending by datetime; equal datetimes keep input order

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }

  friend bool operator==(const TimeMap&, const TimeMap&) = default;
};

/// Parses a link-format TimeMap:
///   <http://a.example/>; rel="original",
///   <http://arc.example/20200101000000/http://a.example/>; rel="memento";
///     datetime="Wed, 01 Jan 2020 00:00:00 GMT", ...
///
/// Links whose rel includes "memento" become entries; a memento link with a
/// missing or unparseable datetime is skipped. Throws
/// Error(kMalformedTimemap) when there is no rel="original" link or no
/// usable memento link.
TimeMap parse_timemap(std::string_view body);

std::string serialize_timemap(const TimeMap& tm);

// Builds a TimeMap from unsorted entries (stable sort by datetime).
TimeMap make_timemap(std::string original_uri, std::vector<MementoEntry> entries);

/// Index of the entry closest to `t`. On equal distance, and among entries
/// sharing a datetime, the earlier entry wins. Throws Error(kEmptyTimemap).
std::size_t closest_index(const TimeMap& tm, Instant t);

const MementoEntry& closest_memento(const TimeMap& tm, Instant t);

}  // namespace mementoscope
