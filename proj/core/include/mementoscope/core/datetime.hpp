#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace mementoscope {

using Instant = std::chrono::sys_seconds;

struct YearBounds {
  int min_year = 1990;
  int max_year = 2100;

  friend bool operator==(const YearBounds&, const YearBounds&) = default;
};

/// A capture datetime as reported by an archive.
///
/// `raw` is the header value exactly as received. `instant` is the parsed UTC
/// value; it is empty only for header values that could not be parsed, which
/// still count as an archival signal but never take part in datestring
/// conversion.
struct MementoDatetime {
  std::optional<Instant> instant;
  std::string raw;

  bool parsed() const noexcept { return instant.has_value(); }

  static MementoDatetime from_instant(Instant t);
  static MementoDatetime unparsed(std::string raw_value);

  friend bool operator==(const MementoDatetime&, const MementoDatetime&) = default;
};

/// Parses an RFC 1123 HTTP-date ("Tue, 05 Mar 2019 09:38:34 GMT").
/// Surrounding whitespace is ignored. Throws Error(kUnparseableDate).
MementoDatetime parse_http_date(std::string_view raw, YearBounds bounds = {});

/// Formats an instant as an RFC 1123 HTTP-date.
std::string format_http_date(Instant t);

/// `YYYYMMDDHHMMSS` in UTC. Throws Error(kMalformedDatestring) for an
/// unparsed datetime.
std::string to_datestring14(const MementoDatetime& dt);
std::string to_datestring14(Instant t);

/// Inverse of to_datestring14. Throws Error(kMalformedDatestring).
MementoDatetime from_datestring14(std::string_view s);

/// `YYYY-MM-DD`.
std::string format_ymd(Instant t);

/// `YYYY-MM-DDTHH:MM:SSZ`.
std::string format_iso8601(Instant t);
std::optional<Instant> parse_iso8601(std::string_view s);

Instant make_instant(int year, unsigned month, unsigned day, int hour = 0, int minute = 0,
                     int second = 0);

}  // namespace mementoscope
