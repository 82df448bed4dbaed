// Reaches real archives. Registered only with -DMEMENTOSCOPE_LIVE_NETWORK_TESTS=ON.

#include <gtest/gtest.h>

#include "mementoscope/core/classify.hpp"
#include "mementoscope/fetch/fetcher.hpp"
#include "mementoscope/fetch/live_transport.hpp"

using namespace mementoscope;

TEST(LiveWayback, MitreMementoCarriesDatetime) {
  LiveTransport t;
  const auto r = fetch_resource(t, "https://web.archive.org/web/20100412125057/http://www.mitre.org/", FetchConfig{});
  ASSERT_TRUE(r.ok()) << r.error_message;
  ASSERT_TRUE(r.memento_datetime);
  // Wayback may redirect to the nearest capture, which need not be the exact second.
  EXPECT_EQ(to_datestring14(*r.memento_datetime).substr(0, 6), "201004");
}

TEST(LiveWayback, RootMementoClassification) {
  LiveTransport t;
  FetchConfig cfg;
  cfg.max_depth = 1;
  const auto tree = build_frame_tree(t, "https://web.archive.org/web/20100412125057/http://www.mitre.org/", cfg);
  const auto c = classify_tree(tree, default_known_archives());
  EXPECT_TRUE(c.kind == PageKind::kRootMemento || c.kind == PageKind::kZombieMemento);
}

TEST(LiveArchiveToday, DatestringRedirectResolves) {
  LiveTransport t;
  const auto r = fetch_resource(t, "https://archive.is/20100412125057/http://www.mitre.org/", FetchConfig{});
  if (!r.ok()) GTEST_SKIP() << "archive.is unreachable: " << r.error_message;
  EXPECT_NE(*r.final_url, "https://archive.is/20100412125057/http://www.mitre.org/");
}
