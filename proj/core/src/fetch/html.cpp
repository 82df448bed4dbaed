#include "mementoscope/fetch/html.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>

#include "mementoscope/url.hpp"

namespace mementoscope {
namespace {

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

std::string lowered(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), lower);
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp <= 0x10FFFF) {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string decode_entities(std::string_view s) {
  static const std::map<std::string, char, std::less<>> kNamed = {
      {"amp", '&'}, {"lt", '<'}, {"gt", '>'}, {"quot", '"'}, {"apos", '\''}};
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '&') {
      out += s[i];
      continue;
    }
    const auto semi = s.find(';', i);
    if (semi == std::string_view::npos || semi - i > 10) {
      out += s[i];
      continue;
    }
    const std::string_view name = s.substr(i + 1, semi - i - 1);
    if (!name.empty() && name[0] == '#') {
      std::uint32_t cp = 0;
      bool ok = name.size() > 1;
      const bool hex = ok && (name[1] == 'x' || name[1] == 'X');
      for (std::size_t k = hex ? 2 : 1; ok && k < name.size(); ++k) {
        const char c = name[k];
        if (hex && std::isxdigit(static_cast<unsigned char>(c))) {
          cp = cp * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(c))
                                                        ? c - '0'
                                                        : lower(c) - 'a' + 10);
        } else if (!hex && std::isdigit(static_cast<unsigned char>(c))) {
          cp = cp * 10 + static_cast<std::uint32_t>(c - '0');
        } else {
          ok = false;
        }
        if (cp > 0x10FFFF) ok = false;
      }
      if (ok && name.size() > (hex ? 2u : 1u)) {
        append_utf8(out, cp);
        i = semi;
        continue;
      }
    } else if (auto it = kNamed.find(name); it != kNamed.end()) {
      out += it->second;
      i = semi;
      continue;
    }
    out += s[i];
  }
  return out;
}

struct Tag {
  std::string name;
  std::map<std::string, std::string> attributes;  // first occurrence wins
};

class Scanner {
 public:
  explicit Scanner(std::string_view doc) : doc_(doc) {}

  template <typename OnTag>
  void run(OnTag&& on_tag) {
    while (pos_ < doc_.size()) {
      const auto lt = doc_.find('<', pos_);
      if (lt == std::string_view::npos) return;
      pos_ = lt;
      if (doc_.substr(pos_, 4) == "<!--") {
        skip_past("-->", pos_ + 4);
      } else if (pos_ + 1 < doc_.size() && (doc_[pos_ + 1] == '!' || doc_[pos_ + 1] == '?' ||
                                            doc_[pos_ + 1] == '/')) {
        skip_past(">", pos_ + 1);
      } else if (pos_ + 1 < doc_.size() && std::isalpha(static_cast<unsigned char>(doc_[pos_ + 1]))) {
        Tag tag = read_tag();
        on_tag(tag);
        if (tag.name == "script" || tag.name == "style" || tag.name == "textarea" ||
            tag.name == "title") {
          skip_raw_text(tag.name);
        }
      } else {
        ++pos_;
      }
    }
  }

 private:
  void skip_past(std::string_view marker, std::size_t from) {
    const auto at = doc_.find(marker, from);
    pos_ = at == std::string_view::npos ? doc_.size() : at + marker.size();
  }

  void skip_raw_text(const std::string& name) {
    const std::string closing = "</" + name;
    while (pos_ < doc_.size()) {
      const auto lt = doc_.find("</", pos_);
      if (lt == std::string_view::npos) {
        pos_ = doc_.size();
        return;
      }
      if (lowered(doc_.substr(lt, closing.size())) == closing) {
        pos_ = lt;
        return;
      }
      pos_ = lt + 2;
    }
  }

  Tag read_tag() {
    Tag tag;
    ++pos_;  // '<'
    while (pos_ < doc_.size() && !is_space(doc_[pos_]) && doc_[pos_] != '>' && doc_[pos_] != '/') {
      tag.name += lower(doc_[pos_++]);
    }
    for (;;) {
      while (pos_ < doc_.size() && (is_space(doc_[pos_]) || doc_[pos_] == '/')) ++pos_;
      if (pos_ >= doc_.size()) return tag;
      if (doc_[pos_] == '>') {
        ++pos_;
        return tag;
      }
      std::string name;
      while (pos_ < doc_.size() && !is_space(doc_[pos_]) && doc_[pos_] != '=' &&
             doc_[pos_] != '>' && !(doc_[pos_] == '/' && !name.empty())) {
        name += lower(doc_[pos_++]);
      }
      while (pos_ < doc_.size() && is_space(doc_[pos_])) ++pos_;
      std::string value;
      if (pos_ < doc_.size() && doc_[pos_] == '=') {
        ++pos_;
        while (pos_ < doc_.size() && is_space(doc_[pos_])) ++pos_;
        if (pos_ < doc_.size() && (doc_[pos_] == '"' || doc_[pos_] == '\'')) {
          const char quote = doc_[pos_++];
          const auto end = doc_.find(quote, pos_);
          const auto stop = end == std::string_view::npos ? doc_.size() : end;
          value = decode_entities(doc_.substr(pos_, stop - pos_));
          pos_ = end == std::string_view::npos ? doc_.size() : end + 1;
        } else {
          const auto start = pos_;
          while (pos_ < doc_.size() && !is_space(doc_[pos_]) && doc_[pos_] != '>') ++pos_;
          value = decode_entities(doc_.substr(start, pos_ - start));
        }
      }
      if (!name.empty()) tag.attributes.emplace(std::move(name), std::move(value));
    }
  }

  std::string_view doc_;
  std::size_t pos_ = 0;
};

bool has_token(std::string_view list, std::string_view token) {
  std::size_t i = 0;
  while (i < list.size()) {
    while (i < list.size() && is_space(list[i])) ++i;
    const auto start = i;
    while (i < list.size() && !is_space(list[i])) ++i;
    if (lowered(list.substr(start, i - start)) == token) return true;
  }
  return false;
}

std::string effective_base(const HtmlReferences& refs, std::string_view base_url) {
  if (refs.base_href) {
    if (auto resolved = resolve_url(base_url, *refs.base_href)) return *resolved;
  }
  return std::string(base_url);
}

}  // namespace

HtmlReferences scan_html(std::string_view document) {
  HtmlReferences refs;
  Scanner scanner(document);
  scanner.run([&](const Tag& tag) {
    auto attr = [&](const char* name) -> const std::string* {
      auto it = tag.attributes.find(name);
      return it == tag.attributes.end() ? nullptr : &it->second;
    };
    if (tag.name == "base") {
      if (const auto* href = attr("href"); href && !refs.base_href) refs.base_href = *href;
    } else if (tag.name == "iframe" || tag.name == "frame") {
      if (const auto* src = attr("src"); src && !src->empty()) refs.frames.push_back(*src);
    } else if (tag.name == "img" || tag.name == "script") {
      if (const auto* src = attr("src"); src && !src->empty()) refs.subresources.push_back(*src);
    } else if (tag.name == "link") {
      const auto* rel = attr("rel");
      const auto* href = attr("href");
      if (rel && href && !href->empty() && has_token(*rel, "stylesheet")) {
        refs.subresources.push_back(*href);
      }
    }
  });
  return refs;
}

std::vector<std::string> extract_frames(std::string_view document, std::string_view base_url) {
  const HtmlReferences refs = scan_html(document);
  const std::string base = effective_base(refs, base_url);
  const auto self = parse_url(base_url);
  const std::string self_key = self ? self->without_fragment() : std::string(base_url);

  std::vector<std::string> out;
  for (const auto& ref : refs.frames) {
    auto resolved = resolve_url(base, ref);
    if (!resolved) continue;
    if (parse_url(*resolved)->without_fragment() == self_key) continue;
    out.push_back(std::move(*resolved));
  }
  return out;
}

std::vector<std::string> extract_subresources(std::string_view document,
                                              std::string_view base_url) {
  const HtmlReferences refs = scan_html(document);
  const std::string base = effective_base(refs, base_url);
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& ref : refs.subresources) {
    auto resolved = resolve_url(base, ref);
    if (!resolved) continue;
    const std::string key = parse_url(*resolved)->without_fragment();
    if (seen.insert(key).second) out.push_back(key);
  }
  return out;
}

bool is_html_content_type(std::string_view content_type) {
  const std::string ct = lowered(content_type.substr(0, content_type.find(';')));
  std::string_view trimmed = ct;
  while (!trimmed.empty() && is_space(trimmed.back())) trimmed.remove_suffix(1);
  while (!trimmed.empty() && is_space(trimmed.front())) trimmed.remove_prefix(1);
  return trimmed == "text/html" || trimmed == "application/xhtml+xml";
}

}  // namespace mementoscope
