#include <pthread.h>
#include <signal.h>

#include <ostream>
#include <thread>

#include "cli/cli.hpp"
#include "mementoscope/service/app.hpp"
#include "mementoscope/service/rest_server.hpp"

namespace mementoscope::cli {

int run_serve(Context& ctx, const ServeArgs& args) {
  AppConfig config = ctx.config;
  if (args.listen) config.listen_address = parse_listen_address(*args.listen);
  const ListenAddress addr = config.listen_address;

  // SIGINT/SIGTERM are taken synchronously by this thread; every other
  // thread inherits the blocked mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  App app(std::move(config), ctx.transport, ctx.clock);
  RestServer server(app);
  const int port = server.bind(addr.host, addr.port);
  if (port < 0) {
    *ctx.err << "mementoscope: cannot listen on " << addr.to_string() << "\n";
    return kFailure;
  }
  *ctx.out << "listening on http://" << addr.host << ":" << port << std::endl;

  std::thread listener([&] { server.listen(); });
  int sig = 0;
  sigwait(&signals, &sig);
  server.stop();
  listener.join();
  *ctx.out << "stopped\n";
  return kOk;
}

}  // namespace mementoscope::cli
