#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cli/cli.hpp"
#include "mementoscope/error.hpp"
#include "mementoscope/fetch/fetcher.hpp"
#include "mementoscope/service/json_io.hpp"
#include "mementoscope/timemap/offset.hpp"
#include "mementoscope/timemap/timemap.hpp"
#include "mementoscope/url.hpp"

namespace mementoscope::cli {
namespace {

std::vector<int> parse_offsets(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "bad offset '" + item + "'");
    }
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "no offsets given");
  return out;
}

Instant parse_instant(const std::string& s) {
  if (s.size() == 14 && s.find_first_not_of("0123456789") == std::string::npos) {
    try {
      return *from_datestring14(s).instant;
    } catch (const Error&) {
    }
  }
  if (auto t = parse_iso8601(s)) return *t;
  throw Error(ErrorCode::kInvalidArgument, "bad instant '" + s + "'");
}

std::string load_source(Context& ctx, const std::string& source) {
  auto url = parse_url(source);
  if (url && url->is_http()) {
    // fetch_resource keeps bodies for HTML only; TimeMaps are link-format.
    HttpRequest req;
    req.url = source;
    req.timeout = ctx.config.fetch.per_request_timeout;
    req.headers.emplace_back("User-Agent", ctx.config.fetch.user_agent);
    FollowedExchange hop =
        send_following_redirects(*ctx.transport, std::move(req), ctx.config.fetch.redirect_limit);
    if (!hop.exchange.response) {
      throw Error(ErrorCode::kIoError, "cannot fetch " + source + ": " + hop.exchange.message);
    }
    if (hop.exchange.response->status != 200) {
      throw Error(ErrorCode::kIoError,
                  "HTTP " + std::to_string(hop.exchange.response->status) + " from " + hop.final_url);
    }
    return hop.exchange.response->body;
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + source);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run_timemap_eval(Context& ctx, const TimemapEvalArgs& args) {
  const std::vector<int> offsets = parse_offsets(args.offsets);
  const TimeMap tm = parse_timemap(load_source(ctx, args.source));

  Instant start = tm.entries.front().instant();
  Instant end = tm.entries.back().instant();
  if (args.range) {
    const auto dots = args.range->find("..");
    if (dots == std::string::npos) throw Error(ErrorCode::kInvalidArgument, "range must be A..B");
    start = parse_instant(args.range->substr(0, dots));
    end = parse_instant(args.range->substr(dots + 2));
  }
  if (!(start < end)) throw Error(ErrorCode::kInvalidArgument, "range start must precede its end");

  const auto results = offset_match_rates(tm, start, end, args.step, offsets);

  std::ostream& out = *ctx.out;
  out << "timemap: " << tm.original_uri << " (" << tm.size() << " mementos)\n";
  out << "range: " << format_iso8601(start) << " .. " << format_iso8601(end) << " step "
      << args.step << "s\n";
  out << "offset_s    samples    matches   rate\n";
  char line[128];
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%8d %10llu %10llu   %.6f\n", r.offset_seconds,
                  static_cast<unsigned long long>(r.samples),
                  static_cast<unsigned long long>(r.matches), r.match_rate);
    out << line;
  }

  Json doc{{"original_uri", tm.original_uri},
           {"mementos", tm.size()},
           {"range", {{"start", format_iso8601(start)}, {"end", format_iso8601(end)}}},
           {"step_seconds", args.step},
           {"results", Json::array()}};
  for (const auto& r : results) doc["results"].push_back(offset_result_to_json(r));
  out << doc.dump(2) << "\n";
  return kOk;
}

}  // namespace mementoscope::cli
