#include <gtest/gtest.h>

#include <set>

#include "mementoscope/core/known_archive.hpp"

using namespace mementoscope;

TEST(KnownArchives, DefaultListHasTestedArchivesPlusMegalodon) {
  const auto archives = default_known_archives();
  std::set<std::string> names;
  for (const auto& a : archives) names.insert(a.display_name);
  const std::set<std::string> expected = {
      "Archive-It",
      "Archive.today",
      "Australian Web Archive (Trove)",
      "BAnQ",
      "Bibliotheca Alexandrina Web Archive",
      "Icelandic Web Archive",
      "Internet Archive",
      "Library and Archives Canada",
      "Library of Congress",
      "National Records of Scotland",
      "Perma.cc",
      "Portuguese Web Archive",
      "Stanford Web Archive",
      "UK National Archives Web Archive",
      "UK Parliament Web Archive",
      "UK Web Archive",
      "Megalodon",
  };
  EXPECT_EQ(names, expected);
  EXPECT_EQ(archives.size(), 17u);
  EXPECT_FALSE(validate_archives(archives));
}

TEST(KnownArchives, OnlyTroveAndPermaDisplayInIframe) {
  std::set<std::string> iframe;
  for (const auto& a : default_known_archives()) {
    if (a.iframe_display) iframe.insert(a.id);
  }
  EXPECT_EQ(iframe, (std::set<std::string>{"trove", "perma_cc"}));
}

TEST(KnownArchives, RedirectStyles) {
  const auto archives = default_known_archives();
  const auto* ia = find_archive_by_id(archives, archive_ids::kInternetArchive);
  const auto* at = find_archive_by_id(archives, archive_ids::kArchiveToday);
  const auto* mg = find_archive_by_id(archives, archive_ids::kMegalodon);
  ASSERT_TRUE(ia && at && mg);
  EXPECT_EQ(ia->redirect_style, RedirectStyle::kNearestDatetime);
  EXPECT_EQ(ia->replay_base, "https://web.archive.org/web");
  EXPECT_EQ(at->redirect_style, RedirectStyle::kNearestDatetime);
  EXPECT_EQ(at->replay_base, "https://archive.is");
  EXPECT_EQ(mg->redirect_style, RedirectStyle::kNone);
  EXPECT_TRUE(ia->submit && at->submit && mg->submit);
}

TEST(KnownArchives, FindForUrl) {
  const auto archives = default_known_archives();
  auto id_for = [&](const char* url) -> std::string {
    const auto* a = find_archive_for_url(archives, url);
    return a ? a->id : "";
  };
  EXPECT_EQ(id_for("https://web.archive.org/web/20100412125057/http://www.mitre.org/"),
            "internet_archive");
  EXPECT_EQ(id_for("https://archive.ph/abcde"), "archive_today");
  EXPECT_EQ(id_for("https://sub.perma.cc/x"), "perma_cc");
  EXPECT_EQ(id_for("https://notperma.cc/x"), "");
  EXPECT_EQ(id_for("https://example.com/"), "");
  EXPECT_EQ(id_for("garbage"), "");
}

TEST(KnownArchives, ValidationProblems) {
  auto archives = default_known_archives();
  archives.push_back(archives.front());
  EXPECT_TRUE(validate_archives(archives));

  archives = default_known_archives();
  archives[0].host_patterns.clear();
  EXPECT_TRUE(validate_archives(archives));

  archives = default_known_archives();
  for (auto& a : archives) {
    if (a.id == archive_ids::kInternetArchive) a.replay_base.reset();
  }
  EXPECT_TRUE(validate_archives(archives));
}

TEST(KnownArchives, NameRoundTrips) {
  for (auto s : {RedirectStyle::kNearestDatetime, RedirectStyle::kNone}) {
    EXPECT_EQ(redirect_style_from_name(redirect_style_name(s)), s);
  }
  for (auto m : {SubmitMethod::kGetAppend, SubmitMethod::kPostForm}) {
    EXPECT_EQ(submit_method_from_name(submit_method_name(m)), m);
  }
  EXPECT_FALSE(redirect_style_from_name("sideways"));
}
