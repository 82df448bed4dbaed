#include "mementoscope/core/datetime.hpp"

#include <array>
#include <cctype>
#include <cstdio>

#include "mementoscope/error.hpp"

namespace mementoscope {
namespace {

using namespace std::chrono;

constexpr std::array<std::string_view, 7> kWeekdays = {"Sun", "Mon", "Tue", "Wed",
                                                       "Thu", "Fri", "Sat"};
constexpr std::array<std::string_view, 12> kMonths = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                      "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool read_digits(std::string_view s, std::size_t pos, std::size_t count, int& out) {
  if (pos + count > s.size()) return false;
  int value = 0;
  for (std::size_t i = pos; i < pos + count; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    value = value * 10 + (s[i] - '0');
  }
  out = value;
  return true;
}

bool valid_civil(int y, int mo, int d, int h, int mi, int s) {
  if (mo < 1 || mo > 12 || d < 1 || h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 59) {
    return false;
  }
  return year_month_day{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}}
      .ok();
}

struct Civil {
  int year, month, day, hour, minute, second;
};

Civil to_civil(Instant t) {
  const auto days = floor<std::chrono::days>(t);
  const year_month_day ymd{days};
  const hh_mm_ss hms{t - days};
  return {static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
          static_cast<int>(static_cast<unsigned>(ymd.day())), static_cast<int>(hms.hours().count()),
          static_cast<int>(hms.minutes().count()), static_cast<int>(hms.seconds().count())};
}

[[noreturn]] void unparseable(std::string_view raw, const char* why) {
  throw Error(ErrorCode::kUnparseableDate, "'" + std::string(raw) + "': " + why);
}

}  // namespace

Instant make_instant(int y, unsigned mo, unsigned d, int h, int mi, int s) {
  return sys_days{year{y} / month{mo} / day{d}} + hours{h} + minutes{mi} + seconds{s};
}

MementoDatetime MementoDatetime::from_instant(Instant t) {
  return MementoDatetime{t, format_http_date(t)};
}

MementoDatetime MementoDatetime::unparsed(std::string raw_value) {
  return MementoDatetime{std::nullopt, std::move(raw_value)};
}

// IMF-fixdate: "Sun, 06 Nov 1994 08:49:37 GMT" (29 characters).
MementoDatetime parse_http_date(std::string_view raw, YearBounds bounds) {
  const std::string_view s = trim(raw);
  if (s.size() != 29) unparseable(raw, "not an RFC 1123 date");
  bool weekday_ok = false;
  for (auto w : kWeekdays) weekday_ok = weekday_ok || s.substr(0, 3) == w;
  if (!weekday_ok || s.substr(3, 2) != ", " || s[7] != ' ' || s[11] != ' ' || s[16] != ' ' ||
      s[19] != ':' || s[22] != ':' || s.substr(25) != " GMT") {
    unparseable(raw, "not an RFC 1123 date");
  }
  int month_index = -1;
  for (std::size_t i = 0; i < kMonths.size(); ++i) {
    if (s.substr(8, 3) == kMonths[i]) month_index = static_cast<int>(i) + 1;
  }
  int d = 0, y = 0, h = 0, mi = 0, sec = 0;
  if (month_index < 0 || !read_digits(s, 5, 2, d) || !read_digits(s, 12, 4, y) ||
      !read_digits(s, 17, 2, h) || !read_digits(s, 20, 2, mi) || !read_digits(s, 23, 2, sec)) {
    unparseable(raw, "not an RFC 1123 date");
  }
  if (!valid_civil(y, month_index, d, h, mi, sec)) unparseable(raw, "impossible calendar date");
  if (y < bounds.min_year || y > bounds.max_year) unparseable(raw, "year out of range");
  return MementoDatetime{make_instant(y, static_cast<unsigned>(month_index),
                                      static_cast<unsigned>(d), h, mi, sec),
                         std::string(raw)};
}

std::string format_http_date(Instant t) {
  const Civil c = to_civil(t);
  const weekday wd{floor<days>(t)};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%s, %02d %s %04d %02d:%02d:%02d GMT",
                kWeekdays[wd.c_encoding()].data(), c.day, kMonths[c.month - 1].data(), c.year,
                c.hour, c.minute, c.second);
  return buf;
}

std::string to_datestring14(Instant t) {
  const Civil c = to_civil(t);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d%02d%02d%02d%02d%02d", c.year, c.month, c.day, c.hour,
                c.minute, c.second);
  return buf;
}

std::string to_datestring14(const MementoDatetime& dt) {
  if (!dt.instant) {
    throw Error(ErrorCode::kMalformedDatestring, "unparsed datetime '" + dt.raw + "'");
  }
  return to_datestring14(*dt.instant);
}

MementoDatetime from_datestring14(std::string_view s) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  if (s.size() != 14 || !read_digits(s, 0, 4, y) || !read_digits(s, 4, 2, mo) ||
      !read_digits(s, 6, 2, d) || !read_digits(s, 8, 2, h) || !read_digits(s, 10, 2, mi) ||
      !read_digits(s, 12, 2, sec)) {
    throw Error(ErrorCode::kMalformedDatestring,
                "'" + std::string(s) + "' is not 14 ASCII digits");
  }
  if (!valid_civil(y, mo, d, h, mi, sec)) {
    throw Error(ErrorCode::kMalformedDatestring,
                "'" + std::string(s) + "' is not a valid calendar datetime");
  }
  return MementoDatetime::from_instant(
      make_instant(y, static_cast<unsigned>(mo), static_cast<unsigned>(d), h, mi, sec));
}

std::string format_ymd(Instant t) {
  const Civil c = to_civil(t);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", c.year, c.month, c.day);
  return buf;
}

std::string format_iso8601(Instant t) {
  const Civil c = to_civil(t);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", c.year, c.month, c.day, c.hour,
                c.minute, c.second);
  return buf;
}

std::optional<Instant> parse_iso8601(std::string_view s) {
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, sec = 0;
  if (s.size() != 20 || s[4] != '-' || s[7] != '-' || s[10] != 'T' || s[13] != ':' ||
      s[16] != ':' || s[19] != 'Z' || !read_digits(s, 0, 4, y) || !read_digits(s, 5, 2, mo) ||
      !read_digits(s, 8, 2, d) || !read_digits(s, 11, 2, h) || !read_digits(s, 14, 2, mi) ||
      !read_digits(s, 17, 2, sec) || !valid_civil(y, mo, d, h, mi, sec)) {
    return std::nullopt;
  }
  return make_instant(y, static_cast<unsigned>(mo), static_cast<unsigned>(d), h, mi, sec);
}

}  // namespace mementoscope
