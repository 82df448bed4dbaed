#include "mementoscope/core/frame_tree.hpp"

#include <algorithm>

namespace mementoscope {

std::string_view fetch_error_name(FetchError e) {
  switch (e) {
    case FetchError::kTimeout: return "TIMEOUT";
    case FetchError::kTooManyRedirects: return "TOO_MANY_REDIRECTS";
    case FetchError::kNetworkError: return "NETWORK_ERROR";
    case FetchError::kUnsupportedScheme: return "UNSUPPORTED_SCHEME";
  }
  return "NETWORK_ERROR";
}

std::optional<FetchError> fetch_error_from_name(std::string_view name) {
  for (auto e : {FetchError::kTimeout, FetchError::kTooManyRedirects, FetchError::kNetworkError,
                 FetchError::kUnsupportedScheme}) {
    if (fetch_error_name(e) == name) return e;
  }
  return std::nullopt;
}

namespace {

std::size_t count(const FrameNode& n) {
  std::size_t total = 1;
  for (const auto& c : n.children) total += count(c);
  return total;
}

int deepest(const FrameNode& n) {
  int d = n.depth;
  for (const auto& c : n.children) d = std::max(d, deepest(c));
  return d;
}

std::optional<std::string> check(const FrameNode& n, std::vector<const std::string*>& ancestors) {
  for (const auto* a : ancestors) {
    if (!n.final_url.empty() && *a == n.final_url) {
      return "cycle: " + n.final_url + " repeats an ancestor";
    }
  }
  ancestors.push_back(&n.final_url);
  for (const auto& c : n.children) {
    if (c.depth != n.depth + 1) {
      return "depth of " + c.url + " is " + std::to_string(c.depth) + ", expected " +
             std::to_string(n.depth + 1);
    }
    if (auto err = check(c, ancestors)) return err;
  }
  ancestors.pop_back();
  return std::nullopt;
}

}  // namespace

std::size_t FrameTree::node_count() const { return count(root); }

int FrameTree::max_depth() const { return deepest(root); }

std::optional<std::string> validate_tree(const FrameTree& tree) {
  if (tree.root.depth != 0) return std::string("root depth must be 0");
  std::vector<const std::string*> ancestors;
  return check(tree.root, ancestors);
}

}  // namespace mementoscope
