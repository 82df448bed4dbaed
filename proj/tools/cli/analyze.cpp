#include <ostream>

#include "cli/cli.hpp"
#include "mementoscope/core/classify.hpp"
#include "mementoscope/error.hpp"
#include "mementoscope/service/report.hpp"
#include "mementoscope/url.hpp"

namespace mementoscope::cli {

int run_analyze(Context& ctx, const AnalyzeArgs& args) {
  auto parsed = parse_url(args.url);
  if (!parsed || !parsed->is_http()) {
    *ctx.err << "mementoscope: '" << args.url << "' is not an absolute http(s) URL\n";
    return kUsage;
  }
  FetchConfig cfg = ctx.config.fetch;
  if (args.max_depth) cfg.max_depth = *args.max_depth;

  AnalysisReport report;
  try {
    report = analyze_url(*ctx.transport, args.url, cfg, ctx.config.known_archives, args.resources,
                         1, ctx.clock());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kRootFetchFailed) throw;
    *ctx.err << "mementoscope: " << e.what() << "\n";
    return kFailure;
  }

  std::ostream& out = *ctx.out;
  if (args.json) {
    out << report_to_json(report).dump(2) << "\n";
    return kOk;
  }
  out << "badge: " << report.badge.value_or("(none)") << "\n";
  out << "kind: " << page_kind_name(report.classification.kind) << "\n";
  for (const auto& line : report.popup) out << line << "\n";
  for (const auto& d : report.classification.deep_dates) {
    out << "nested memento: " << d.url << " " << d.datetime.raw << "\n";
  }
  if (report.resource_datetimes) {
    out << "archived resources: " << report.resource_datetimes->size() << "\n";
    for (const auto& r : *report.resource_datetimes) out << "  " << r.datetime.raw << "  " << r.url << "\n";
  }
  return kOk;
}

}  // namespace mementoscope::cli
