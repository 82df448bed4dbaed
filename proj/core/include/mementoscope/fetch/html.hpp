#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mementoscope {

// Raw (unresolved, entity-decoded) references found in an HTML document.
struct HtmlReferences {
  std::optional<std::string> base_href;
  std::vector<std::string> frames;        // iframe/frame src
  std::vector<std::string> subresources;  // img src, script src, stylesheet href
};

// Permissive single-pass tag scanner. Comments and the contents of raw-text
// elements (script, style, textarea, title) are skipped; malformed markup
// never fails.
HtmlReferences scan_html(std::string_view document);

// Absolute URLs of every iframe/frame `src`, in document order, resolved
// against `<base href>` when present and `base_url` otherwise. References
// that resolve back to `base_url` itself are dropped.
std::vector<std::string> extract_frames(std::string_view document, std::string_view base_url);

// Absolute URLs of img/script/stylesheet references, document order, no
// duplicates.
std::vector<std::string> extract_subresources(std::string_view document,
                                              std::string_view base_url);

bool is_html_content_type(std::string_view content_type);

}  // namespace mementoscope
