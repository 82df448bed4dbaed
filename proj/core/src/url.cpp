#include "mementoscope/url.hpp"

#include <cctype>
#include <vector>

namespace mementoscope {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool valid_scheme(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') {
      return false;
    }
  }
  return true;
}

struct Parts {
  std::optional<std::string> scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

// Generic split per RFC 3986 appendix B.
Parts split(std::string_view s) {
  Parts p;
  if (auto hash = s.find('#'); hash != std::string_view::npos) {
    p.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  if (auto colon = s.find(':'); colon != std::string_view::npos) {
    const auto first_delim = s.find_first_of("/?");
    if ((first_delim == std::string_view::npos || colon < first_delim) &&
        valid_scheme(s.substr(0, colon))) {
      p.scheme = lower(s.substr(0, colon));
      s = s.substr(colon + 1);
    }
  }
  if (auto q = s.find('?'); q != std::string_view::npos) {
    p.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  if (s.substr(0, 2) == "//") {
    s.remove_prefix(2);
    const auto slash = s.find('/');
    p.authority = std::string(s.substr(0, slash));
    s = slash == std::string_view::npos ? std::string_view{} : s.substr(slash);
  }
  p.path = std::string(s);
  return p;
}

std::string remove_dot_segments(std::string_view in) {
  std::vector<std::string> out;
  const bool absolute = !in.empty() && in.front() == '/';
  std::size_t pos = absolute ? 1 : 0;
  bool trailing_slash = false;
  while (pos <= in.size()) {
    const auto next = in.find('/', pos);
    const std::string_view seg =
        in.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    trailing_slash = false;
    if (seg == "..") {
      if (!out.empty()) out.pop_back();
      trailing_slash = true;
    } else if (seg == ".") {
      trailing_slash = true;
    } else {
      out.emplace_back(seg);
    }
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  std::string result = absolute ? "/" : "";
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i) result += '/';
    result += out[i];
  }
  if (trailing_slash && !result.empty() && result.back() != '/') result += '/';
  return result;
}

std::string merge_paths(const Parts& base, std::string_view ref_path) {
  if (base.authority && base.path.empty()) return "/" + std::string(ref_path);
  const auto slash = base.path.rfind('/');
  if (slash == std::string::npos) return std::string(ref_path);
  return base.path.substr(0, slash + 1) + std::string(ref_path);
}

std::string serialize(const Parts& p) {
  std::string out;
  if (p.scheme) out += *p.scheme + ":";
  if (p.authority) out += "//" + *p.authority;
  out += p.path;
  if (p.query) out += "?" + *p.query;
  if (p.fragment) out += "#" + *p.fragment;
  return out;
}

}  // namespace

std::string Url::to_string() const {
  std::string out = without_fragment();
  if (fragment) out += "#" + *fragment;
  return out;
}

std::string Url::without_fragment() const {
  std::string out = scheme + ":";
  if (authority) out += "//" + *authority;
  out += path;
  if (query) out += "?" + *query;
  return out;
}

std::string Url::target() const {
  std::string out = path.empty() ? "/" : path;
  if (query) out += "?" + *query;
  return out;
}

std::optional<Url> parse_url(std::string_view text) {
  // Trim ASCII whitespace as browsers do for attribute values.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  Parts p = split(text);
  if (!p.scheme) return std::nullopt;
  Url url;
  url.scheme = *p.scheme;
  url.path = p.path;
  url.query = p.query;
  url.fragment = p.fragment;
  if (p.authority) {
    std::string_view auth = *p.authority;
    if (auto at = auth.rfind('@'); at != std::string_view::npos) auth = auth.substr(at + 1);
    std::string_view host = auth;
    if (!auth.empty() && auth.front() == '[') {
      const auto close = auth.find(']');
      if (close == std::string_view::npos) return std::nullopt;
      host = auth.substr(0, close + 1);
      auth = auth.substr(close + 1);
    } else if (auto colon = auth.rfind(':'); colon != std::string_view::npos) {
      host = auth.substr(0, colon);
      auth = auth.substr(colon);
    } else {
      auth = {};
    }
    if (!auth.empty() && auth.front() == ':' && auth.size() > 1) {
      int port = 0;
      for (char c : auth.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        port = port * 10 + (c - '0');
        if (port > 65535) return std::nullopt;
      }
      url.port = port;
    }
    url.host = lower(host);
    std::string authority = *p.authority;
    const auto host_start = authority.rfind('@') == std::string::npos ? 0 : authority.rfind('@') + 1;
    authority.replace(host_start, host.size(), url.host);
    url.authority = authority;
    if (url.is_http() && url.host.empty()) return std::nullopt;
  } else if (url.is_http()) {
    return std::nullopt;
  }
  return url;
}

std::optional<std::string> resolve_url(std::string_view base_text, std::string_view reference) {
  while (!reference.empty() && std::isspace(static_cast<unsigned char>(reference.front()))) {
    reference.remove_prefix(1);
  }
  while (!reference.empty() && std::isspace(static_cast<unsigned char>(reference.back()))) {
    reference.remove_suffix(1);
  }
  const auto base_url = parse_url(base_text);
  if (!base_url) return std::nullopt;
  const Parts base = split(base_url->to_string());
  const Parts ref = split(reference);
  Parts target;
  if (ref.scheme) {
    target = ref;
    target.path = remove_dot_segments(ref.path);
  } else {
    target.scheme = base.scheme;
    if (ref.authority) {
      target.authority = ref.authority;
      target.path = remove_dot_segments(ref.path);
      target.query = ref.query;
    } else {
      target.authority = base.authority;
      if (ref.path.empty()) {
        target.path = base.path;
        target.query = ref.query ? ref.query : base.query;
      } else {
        target.path = remove_dot_segments(ref.path.front() == '/' ? ref.path
                                                                  : merge_paths(base, ref.path));
        target.query = ref.query;
      }
    }
    target.fragment = ref.fragment;
  }
  const auto parsed = parse_url(serialize(target));
  if (!parsed) return std::nullopt;
  return parsed->to_string();
}

std::string url_host(std::string_view text) {
  const auto url = parse_url(text);
  return url ? url->host : std::string{};
}

bool host_matches_suffix(std::string_view host, std::string_view pattern) {
  if (pattern.empty() || host.size() < pattern.size()) return false;
  const auto tail = host.substr(host.size() - pattern.size());
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(tail[i])) !=
        std::tolower(static_cast<unsigned char>(pattern[i]))) {
      return false;
    }
  }
  return host.size() == pattern.size() || host[host.size() - pattern.size() - 1] == '.';
}

std::string form_urlencode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else if (c == ' ') {
      out += '+';
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

}  // namespace mementoscope
