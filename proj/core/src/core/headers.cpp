#include "mementoscope/core/headers.hpp"

#include <cctype>

namespace mementoscope {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

std::optional<std::string> find_header(const HeaderList& headers, std::string_view name) {
  for (const auto& [key, value] : headers) {
    if (iequals(key, name)) return value;
  }
  return std::nullopt;
}

std::optional<std::string> detect_memento_header(const HeaderList& headers) {
  for (const auto& [key, value] : headers) {
    if (iequals(key, "Memento-Datetime") || iequals(key, "memento_datetime")) return value;
  }
  return std::nullopt;
}

}  // namespace mementoscope
