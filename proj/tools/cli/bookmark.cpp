#include <ostream>

#include "cli/cli.hpp"
#include "mementoscope/archive/bookmark_service.hpp"
#include "mementoscope/archive/submit.hpp"
#include "mementoscope/url.hpp"

namespace mementoscope::cli {

int run_bookmark(Context& ctx, const BookmarkArgs& args) {
  auto parsed = parse_url(args.url);
  if (!parsed || !parsed->is_http()) {
    *ctx.err << "mementoscope: '" << args.url << "' is not an absolute http(s) URL\n";
    return kUsage;
  }
  const auto choice = archive_choice_from_name(args.archive);
  if (!choice) {
    *ctx.err << "mementoscope: unknown archive '" << args.archive << "'\n";
    return kUsage;
  }

  BookmarkServiceOptions opts;
  opts.store_path = ctx.config.store_path;
  opts.log_path = ctx.config.log_path;
  opts.archives = ctx.config.known_archives;
  opts.default_offset_seconds = ctx.config.default_offset_seconds;
  opts.job_workers = 1;

  SubmitOptions submit;
  submit.user_agent = ctx.config.fetch.user_agent;
  auto transport = ctx.transport;
  // Bookmark times are real even when replaying fixtures.
  BookmarkService service(
      std::move(opts),
      [transport, submit](const KnownArchive& archive, const std::string& url) {
        return submit_capture(*transport, archive, url, submit);
      },
      system_now);

  const BookmarkOutcome outcome = service.bookmark(args.url, args.title, *choice, args.offset);
  const BookmarkMutation& m = outcome.mutation;
  std::ostream& out = *ctx.out;
  out << "live node: " << m.live_node << (m.created_live_node ? " (created)" : "") << "\n";
  if (m.folder) out << "folder: " << *m.folder << (m.created_folder ? " (created)" : "") << "\n";
  if (m.archive_node) out << "archive node: " << *m.archive_node << "\n";
  if (m.archive_url) out << "archive url: " << *m.archive_url << "\n";
  if (!outcome.job) return kOk;

  out << "job " << outcome.job->id << ": " << job_status_name(outcome.job->status) << "\n";
  if (!args.wait) return kOk;

  auto done = service.jobs().wait(outcome.job->id, submit.timeout + std::chrono::seconds(30));
  if (!done || !done->finished()) {
    *ctx.err << "mementoscope: job " << outcome.job->id << " did not finish in time\n";
    return kFailure;
  }
  out << "job " << done->id << ": " << job_status_name(done->status);
  if (done->result_url) out << " " << *done->result_url;
  if (done->error) out << " " << *done->error;
  out << "\n";
  return done->status == JobStatus::kDone ? kOk : kFailure;
}

}  // namespace mementoscope::cli
