#include "mementoscope/fetch/fetcher.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "mementoscope/error.hpp"
#include "mementoscope/fetch/html.hpp"
#include "mementoscope/url.hpp"

#ifndef MEMENTOSCOPE_VERSION
#define MEMENTOSCOPE_VERSION "dev"
#endif

namespace mementoscope {
namespace {

// Runs fn(0..n-1) on at most `limit` threads. Results must be written to
// per-index slots by the caller so ordering stays deterministic.
void parallel_for(std::size_t n, int limit, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(limit, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

std::string key_of(std::string_view url) {
  const auto parsed = parse_url(url);
  return parsed ? parsed->without_fragment() : std::string(url);
}

bool looks_like_html(std::string_view body) {
  const auto first = body.find_first_not_of(" \t\r\n\xEF\xBB\xBF");
  return first != std::string_view::npos && body[first] == '<';
}

struct Slot {
  FrameNode node;
  int parent = -1;
  std::vector<int> kids;
  std::optional<std::string> body;
  bool dropped = false;
};

FrameNode assemble(const std::vector<Slot>& slots, int index) {
  FrameNode node = slots[static_cast<std::size_t>(index)].node;
  for (int kid : slots[static_cast<std::size_t>(index)].kids) {
    if (!slots[static_cast<std::size_t>(kid)].dropped) node.children.push_back(assemble(slots, kid));
  }
  return node;
}

void record_into_node(const ResourceRecord& r, FrameNode& node) {
  node.final_url = r.final_url.value_or("");
  node.status = r.status;
  node.fetch_error = r.error;
  node.memento_datetime = r.memento_datetime;
  node.content_type = r.content_type;
}

}  // namespace

std::string default_user_agent() { return std::string("mementoscope/") + MEMENTOSCOPE_VERSION; }

std::optional<std::string> validate_fetch_config(const FetchConfig& cfg) {
  if (cfg.max_depth <= 0) return std::string("max_depth must be positive");
  if (cfg.max_frames <= 0) return std::string("max_frames must be positive");
  if (cfg.redirect_limit <= 0) return std::string("redirect_limit must be positive");
  if (cfg.per_request_timeout.count() <= 0) return std::string("per_request_timeout must be positive");
  if (cfg.concurrency_limit <= 0) return std::string("concurrency_limit must be positive");
  return std::nullopt;
}

std::optional<MementoDatetime> memento_datetime_from_headers(const HeaderList& headers,
                                                             YearBounds bounds) {
  const auto raw = detect_memento_header(headers);
  if (!raw) return std::nullopt;
  try {
    return parse_http_date(*raw, bounds);
  } catch (const Error&) {
    return MementoDatetime::unparsed(*raw);
  }
}

ResourceRecord fetch_resource(HttpTransport& transport, std::string_view url,
                              const FetchConfig& cfg, std::string_view method) {
  ResourceRecord record;
  record.request_url = std::string(url);
  const auto started = std::chrono::steady_clock::now();

  HttpRequest request;
  request.method = std::string(method);
  request.url = key_of(url);
  request.timeout = cfg.per_request_timeout;
  request.headers.emplace_back("User-Agent", cfg.user_agent);
  request.headers.emplace_back("Accept", "*/*");

  FollowedExchange hop = send_following_redirects(transport, std::move(request), cfg.redirect_limit);
  record.redirects = hop.redirects;
  record.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);

  if (!hop.exchange.response) {
    record.error = hop.exchange.error;
    record.error_message = hop.exchange.message;
    return record;
  }
  HttpResponse& response = *hop.exchange.response;
  record.final_url = hop.final_url;
  record.status = response.status;
  record.content_type = find_header(response.headers, "Content-Type");
  record.memento_datetime = memento_datetime_from_headers(response.headers, cfg.year_bounds);
  const bool html = record.content_type ? is_html_content_type(*record.content_type)
                                        : looks_like_html(response.body);
  if (method == "GET" && html) record.body = std::move(response.body);
  record.headers = std::move(response.headers);
  return record;
}

PageFetch fetch_page(HttpTransport& transport, std::string_view url, const FetchConfig& cfg) {
  if (auto problem = validate_fetch_config(cfg)) throw Error(ErrorCode::kInvalidArgument, *problem);

  ResourceRecord root_record = fetch_resource(transport, url, cfg);
  if (!root_record.ok()) {
    throw Error(ErrorCode::kRootFetchFailed,
                std::string(url) + ": " +
                    std::string(fetch_error_name(root_record.error.value_or(FetchError::kNetworkError))) +
                    (root_record.error_message.empty() ? "" : " (" + root_record.error_message + ")"));
  }

  std::vector<Slot> slots;
  slots.emplace_back();
  slots[0].node.url = key_of(url);
  slots[0].node.depth = 0;
  record_into_node(root_record, slots[0].node);
  slots[0].body = std::move(root_record.body);

  auto ancestors_of = [&](int index) {
    std::set<std::string> seen;
    for (int i = index; i >= 0; i = slots[static_cast<std::size_t>(i)].parent) {
      const auto& n = slots[static_cast<std::size_t>(i)].node;
      seen.insert(n.url);
      if (!n.final_url.empty()) seen.insert(n.final_url);
    }
    return seen;
  };

  int frames_left = cfg.max_frames;
  std::vector<int> level = {0};
  for (int depth = 0; depth < cfg.max_depth && !level.empty() && frames_left > 0; ++depth) {
    std::vector<int> pending;
    for (int parent : level) {
      if (!slots[static_cast<std::size_t>(parent)].body || frames_left <= 0) continue;
      const auto lineage = ancestors_of(parent);
      // Extract before growing `slots`; push_back invalidates references.
      const auto frame_urls = extract_frames(*slots[static_cast<std::size_t>(parent)].body,
                                             slots[static_cast<std::size_t>(parent)].node.final_url);
      for (const auto& frame_url : frame_urls) {
        if (frames_left <= 0) break;
        const std::string key = key_of(frame_url);
        if (lineage.count(key)) continue;
        Slot child;
        child.node.url = key;
        child.node.depth = depth + 1;
        child.parent = parent;
        slots.push_back(std::move(child));
        const int index = static_cast<int>(slots.size()) - 1;
        slots[static_cast<std::size_t>(parent)].kids.push_back(index);
        pending.push_back(index);
        --frames_left;
      }
    }

    std::vector<ResourceRecord> records(pending.size());
    parallel_for(pending.size(), cfg.concurrency_limit, [&](std::size_t i) {
      records[i] = fetch_resource(transport, slots[static_cast<std::size_t>(pending[i])].node.url, cfg);
    });

    std::vector<int> next_level;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      Slot& slot = slots[static_cast<std::size_t>(pending[i])];
      record_into_node(records[i], slot.node);
      if (records[i].ok()) {
        // A redirect can land back on an ancestor; such frames are cut.
        std::set<std::string> parents = ancestors_of(slot.parent);
        if (parents.count(slot.node.final_url)) {
          slot.dropped = true;
          continue;
        }
      }
      slot.body = std::move(records[i].body);
      next_level.push_back(pending[i]);
    }
    level = std::move(next_level);
  }

  PageFetch out;
  out.tree.root = assemble(slots, 0);
  // Breadth-first order of surviving documents.
  std::vector<int> queue = {0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Slot& s = slots[static_cast<std::size_t>(queue[q])];
    if (s.body) out.documents.push_back({s.node.final_url, *s.body});
    for (int kid : s.kids) {
      if (!slots[static_cast<std::size_t>(kid)].dropped) queue.push_back(kid);
    }
  }
  return out;
}

FrameTree build_frame_tree(HttpTransport& transport, std::string_view url, const FetchConfig& cfg) {
  return fetch_page(transport, url, cfg).tree;
}

ResourceDatetimes collect_subresource_datetimes(HttpTransport& transport,
                                                const std::vector<FetchedDocument>& documents,
                                                const FetchConfig& cfg) {
  std::vector<std::string> targets;
  std::set<std::string> seen;
  for (const auto& doc : documents) {
    for (auto& ref : extract_subresources(doc.body, doc.url)) {
      if (seen.insert(ref).second) targets.push_back(std::move(ref));
    }
  }

  std::vector<ResourceRecord> records(targets.size());
  parallel_for(targets.size(), cfg.concurrency_limit, [&](std::size_t i) {
    ResourceRecord head = fetch_resource(transport, targets[i], cfg, "HEAD");
    const bool refused = head.ok() && (head.status == 405 || head.status == 501 || head.status >= 400);
    records[i] = (!head.ok() || refused) ? fetch_resource(transport, targets[i], cfg, "GET")
                                         : std::move(head);
  });

  ResourceDatetimes out;
  out.checked = targets.size();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& r = records[i];
    if (!r.ok()) {
      ++out.failed;
      continue;
    }
    if (r.memento_datetime) out.entries.push_back({targets[i], *r.memento_datetime});
  }
  return out;
}

ResourceDatetimes collect_resource_datetimes(HttpTransport& transport, std::string_view url,
                                             const FetchConfig& cfg) {
  const PageFetch page = fetch_page(transport, url, cfg);
  return collect_subresource_datetimes(transport, page.documents, cfg);
}

}  // namespace mementoscope
