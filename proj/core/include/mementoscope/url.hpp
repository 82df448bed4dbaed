#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace mementoscope {

// Minimal RFC 3986 URI handling: enough to resolve frame and subresource
// references and to match archive hostnames. Scheme and host are lowercased
// on parse; everything else is kept verbatim.
struct Url {
  std::string scheme;
  std::optional<std::string> authority;  // userinfo@host:port as written
  std::string host;
  std::optional<int> port;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;

  bool is_http() const { return scheme == "http" || scheme == "https"; }
  std::string to_string() const;
  // Serialization without the fragment.
  std::string without_fragment() const;
  // Path plus query, "/" when empty.
  std::string target() const;
};

// Parses an absolute URI (must carry a scheme).
std::optional<Url> parse_url(std::string_view text);

// Resolves `reference` against absolute `base`; returns std::nullopt when the
// base is not absolute or the reference is unusable.
std::optional<std::string> resolve_url(std::string_view base, std::string_view reference);

// Lowercased host of an absolute URL, empty when unparseable.
std::string url_host(std::string_view text);

// `host` equals `pattern` or ends with "." + pattern.
bool host_matches_suffix(std::string_view host, std::string_view pattern);

// Percent-encodes a string for application/x-www-form-urlencoded bodies.
std::string form_urlencode(std::string_view s);

}  // namespace mementoscope
