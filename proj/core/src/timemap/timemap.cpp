#include "mementoscope/timemap/timemap.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "mementoscope/core/headers.hpp"
#include "mementoscope/error.hpp"

namespace mementoscope {
namespace {

struct Link {
  std::string uri;
  std::vector<std::pair<std::string, std::string>> params;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Splits the body into links. Commas inside <...> or quoted strings do not
// separate links.
std::vector<Link> split_links(std::string_view body) {
  std::vector<Link> links;
  std::size_t i = 0;
  const std::size_t n = body.size();
  while (i < n) {
    while (i < n && (is_space(body[i]) || body[i] == ',')) ++i;
    if (i >= n) break;
    if (body[i] != '<') {
      throw Error(ErrorCode::kMalformedTimemap,
                  "expected '<' at byte " + std::to_string(i));
    }
    const std::size_t close = body.find('>', i + 1);
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedTimemap, "unterminated <uri> at byte " + std::to_string(i));
    }
    Link link;
    link.uri = std::string(trim(body.substr(i + 1, close - i - 1)));
    i = close + 1;

    // ; name="value" or ; name=token, up to the next top-level comma.
    for (;;) {
      while (i < n && is_space(body[i])) ++i;
      if (i >= n || body[i] == ',') break;
      if (body[i] != ';') {
        throw Error(ErrorCode::kMalformedTimemap, "expected ';' at byte " + std::to_string(i));
      }
      ++i;
      while (i < n && is_space(body[i])) ++i;
      const std::size_t name_start = i;
      while (i < n && body[i] != '=' && body[i] != ';' && body[i] != ',' && !is_space(body[i])) ++i;
      std::string name = lower(body.substr(name_start, i - name_start));
      while (i < n && is_space(body[i])) ++i;
      std::string value;
      if (i < n && body[i] == '=') {
        ++i;
        while (i < n && is_space(body[i])) ++i;
        if (i < n && body[i] == '"') {
          const std::size_t end = body.find('"', i + 1);
          if (end == std::string_view::npos) {
            throw Error(ErrorCode::kMalformedTimemap,
                        "unterminated quoted value at byte " + std::to_string(i));
          }
          value = std::string(body.substr(i + 1, end - i - 1));
          i = end + 1;
        } else {
          const std::size_t start = i;
          while (i < n && body[i] != ';' && body[i] != ',' && !is_space(body[i])) ++i;
          value = std::string(body.substr(start, i - start));
        }
      }
      if (!name.empty()) link.params.emplace_back(std::move(name), std::move(value));
    }
    links.push_back(std::move(link));
  }
  return links;
}

std::optional<std::string> param(const Link& link, std::string_view name) {
  for (const auto& [k, v] : link.params) {
    if (k == name) return v;
  }
  return std::nullopt;
}

bool has_rel(const Link& link, std::string_view rel) {
  auto value = param(link, "rel");
  if (!value) return false;
  std::string_view rest = *value;
  while (!rest.empty()) {
    while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
    std::size_t end = 0;
    while (end < rest.size() && !is_space(rest[end])) ++end;
    if (iequals(rest.substr(0, end), rel)) return true;
    rest.remove_prefix(end);
  }
  return false;
}

}  // namespace

TimeMap make_timemap(std::string original_uri, std::vector<MementoEntry> entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const MementoEntry& a, const MementoEntry& b) {
    return a.instant() < b.instant();
  });
  return TimeMap{std::move(original_uri), std::move(entries)};
}

TimeMap parse_timemap(std::string_view body) {
  const auto links = split_links(body);
  std::optional<std::string> original;
  std::vector<MementoEntry> entries;
  for (const auto& link : links) {
    if (!original && has_rel(link, "original")) original = link.uri;
    if (!has_rel(link, "memento")) continue;
    auto dt = param(link, "datetime");
    if (!dt || link.uri.empty()) continue;
    try {
      entries.push_back(MementoEntry{link.uri, parse_http_date(*dt)});
    } catch (const Error&) {
      // Unusable entry; the map is still valid without it.
    }
  }
  if (!original) throw Error(ErrorCode::kMalformedTimemap, "no rel=\"original\" link");
  if (entries.empty()) throw Error(ErrorCode::kMalformedTimemap, "no memento links with a datetime");
  return make_timemap(std::move(*original), std::move(entries));
}

std::string serialize_timemap(const TimeMap& tm) {
  std::string out = "<" + tm.original_uri + ">; rel=\"original\"";
  for (const auto& e : tm.entries) {
    out += ",\n<" + e.uri_m + ">; rel=\"memento\"; datetime=\"" + format_http_date(e.instant()) + "\"";
  }
  out += "\n";
  return out;
}

std::size_t closest_index(const TimeMap& tm, Instant t) {
  if (tm.entries.empty()) throw Error(ErrorCode::kEmptyTimemap, "timemap has no mementos");
  const auto& e = tm.entries;
  // First entry at or after t.
  auto after = std::lower_bound(e.begin(), e.end(), t,
                                [](const MementoEntry& m, Instant v) { return m.instant() < v; });
  if (after == e.begin()) return 0;
  if (after == e.end()) {
    // Latest datetime; step back to the first entry sharing it.
    auto first = std::lower_bound(e.begin(), e.end(), e.back().instant(),
                                  [](const MementoEntry& m, Instant v) { return m.instant() < v; });
    return static_cast<std::size_t>(first - e.begin());
  }
  const Instant before_t = std::prev(after)->instant();
  auto before = std::lower_bound(e.begin(), after, before_t,
                                 [](const MementoEntry& m, Instant v) { return m.instant() < v; });
  const auto d_before = t - before_t;
  const auto d_after = after->instant() - t;
  return static_cast<std::size_t>((d_before <= d_after ? before : after) - e.begin());
}

const MementoEntry& closest_memento(const TimeMap& tm, Instant t) {
  return tm.entries[closest_index(tm, t)];
}

}  // namespace mementoscope
