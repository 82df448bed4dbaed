#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mementoscope {

// Response headers in wire order. Names keep their original spelling.
using HeaderList = std::vector<std::pair<std::string, std::string>>;

bool iequals(std::string_view a, std::string_view b);

// First value whose name matches case-insensitively.
std::optional<std::string> find_header(const HeaderList& headers, std::string_view name);

// Value of the first `Memento-Datetime` (or `memento_datetime`) header.
std::optional<std::string> detect_memento_header(const HeaderList& headers);

}  // namespace mementoscope
