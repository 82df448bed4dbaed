#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

#include "mementoscope/error.hpp"
#include "mementoscope/fetch/fetcher.hpp"
#include "mementoscope/fetch/fixture_transport.hpp"
#include "mementoscope/fetch/live_transport.hpp"

namespace mementoscope::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Memento detection and bookmark-as-archive engine", "mementoscope"};
  app.set_version_flag("--version", default_user_agent());
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  std::optional<std::string> fixtures_dir;
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--fixtures", fixtures_dir, "Replay recorded *.http exchanges instead of the network")
      ->check(CLI::ExistingDirectory);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify a page's frame tree");
  analyze_cmd->add_option("url", analyze.url, "Page URL")->required();
  analyze_cmd->add_option("--max-depth", analyze.max_depth, "Frame expansion depth")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--resources", analyze.resources, "Collect subresource datetimes");
  analyze_cmd->add_flag("--json", analyze.json, "Print the full report as JSON");

  BookmarkArgs bookmark;
  auto* bookmark_cmd = app.add_subcommand("bookmark", "Bookmark a URL and archive it");
  bookmark_cmd->add_option("url", bookmark.url, "Page URL")->required();
  bookmark_cmd->add_option("--archive", bookmark.archive, "Archive to submit to")
      ->required()
      ->check(CLI::IsMember({"none", "internet_archive", "archive_today", "megalodon"}));
  bookmark_cmd->add_option("--title", bookmark.title, "Bookmark title");
  bookmark_cmd->add_option("--offset", bookmark.offset, "Seconds added to the archive datestring")
      ->check(CLI::NonNegativeNumber);
  bookmark_cmd->add_flag("--wait", bookmark.wait, "Wait for the archive job to finish");

  TimemapEvalArgs eval;
  auto* eval_cmd = app.add_subcommand("timemap-eval", "Offset accuracy over a TimeMap");
  eval_cmd->add_option("timemap", eval.source, "TimeMap file or URL")->required();
  eval_cmd->add_option("--offsets", eval.offsets, "Comma-separated offsets in seconds")
      ->capture_default_str();
  eval_cmd->add_option("--range", eval.range, "Sample range A..B (ISO 8601 or 14-digit)");
  eval_cmd->add_option("--step", eval.step, "Seconds between samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the REST service");
  serve_cmd->add_option("--listen", serve.listen, "host:port");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Context ctx;
  ctx.out = &out;
  ctx.err = &err;
  try {
    ctx.config = config_path ? load_app_config(*config_path) : AppConfig{};
    apply_env_overrides(ctx.config);
    if (fixtures_dir) {
      ctx.transport = std::make_shared<FixtureTransport>(*fixtures_dir);
      ctx.fixtures = true;
      // Replayed runs must not depend on the wall clock.
      ctx.clock = fixed_clock(Instant{});
    } else {
      ctx.transport = std::make_shared<LiveTransport>();
    }
  } catch (const Error& e) {
    err << "mementoscope: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(ctx, analyze);
    if (*bookmark_cmd) return run_bookmark(ctx, bookmark);
    if (*eval_cmd) return run_timemap_eval(ctx, eval);
    if (*serve_cmd) return run_serve(ctx, serve);
  } catch (const Error& e) {
    err << "mementoscope: " << e.what() << "\n";
    return e.code() == ErrorCode::kInvalidArgument ? kUsage : kFailure;
  } catch (const std::exception& e) {
    err << "mementoscope: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace mementoscope::cli
