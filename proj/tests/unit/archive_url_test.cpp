#include <gtest/gtest.h>

#include "mementoscope/archive/archive_url.hpp"
#include "mementoscope/error.hpp"

using namespace mementoscope;

namespace {

const KnownArchive& archive(std::string_view id) {
  static const auto all = default_known_archives();
  return *find_archive_by_id(all, id);
}

}  // namespace

TEST(ConstructArchiveUrl, Wayback) {
  EXPECT_EQ(construct_archive_url(archive(archive_ids::kInternetArchive), "https://example.com",
                                  make_instant(2021, 3, 4, 3, 0, 0), 0),
            "https://web.archive.org/web/20210304030000/https://example.com");
}

TEST(ConstructArchiveUrl, ArchiveToday) {
  EXPECT_EQ(construct_archive_url(archive(archive_ids::kArchiveToday), "http://www.mitre.org/",
                                  make_instant(2010, 4, 12, 12, 50, 57), 0),
            "https://archive.is/20100412125057/http://www.mitre.org/");
}

TEST(ConstructArchiveUrl, AfternoonUsesTwentyFourHourClock) {
  EXPECT_EQ(construct_archive_url(archive(archive_ids::kInternetArchive), "https://example.com",
                                  make_instant(2021, 3, 4, 15, 0, 0), 0),
            "https://web.archive.org/web/20210304150000/https://example.com");
}

TEST(ConstructArchiveUrl, OffsetAddsSeconds) {
  const Instant t = make_instant(2021, 12, 31, 23, 59, 30);
  for (int offset : {0, 1, 30, 60, 120, 86400}) {
    const auto url = construct_archive_url(archive(archive_ids::kInternetArchive), "https://x.example/", t, offset);
    EXPECT_EQ(datestring_in_url(url), to_datestring14(t + std::chrono::seconds(offset)));
  }
  EXPECT_EQ(datestring_in_url(construct_archive_url(archive(archive_ids::kInternetArchive),
                                                    "https://x.example/", t, 60)),
            "20220101000030");
}

TEST(ConstructArchiveUrl, MegalodonHasNoRedirect) {
  try {
    construct_archive_url(archive(archive_ids::kMegalodon), "https://example.com", make_instant(2021, 1, 1), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoRedirectSupport);
  }
}

TEST(ConstructArchiveUrl, NegativeOffsetRejected) {
  try {
    construct_archive_url(archive(archive_ids::kInternetArchive), "https://example.com", make_instant(2021, 1, 1), -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(ArchiveNodeTitle, Format) {
  EXPECT_EQ(archive_node_title(archive(archive_ids::kArchiveToday), "https://example.com",
                               make_instant(2020, 3, 4, 15, 0, 0)),
            "Archive.today example.com 2020-03-04");
}

TEST(DatestringInUrl, Variants) {
  EXPECT_EQ(datestring_in_url("https://web.archive.org/web/20100412125057/http://www.mitre.org/"),
            "20100412125057");
  EXPECT_EQ(datestring_in_url("https://web.archive.org/web/20100412125057id_/http://www.mitre.org/"),
            "20100412125057");
  EXPECT_EQ(datestring_in_url("https://archive.is/20100412125057/http://www.mitre.org/"), "20100412125057");
  EXPECT_FALSE(datestring_in_url("https://archive.is/AbCdE"));
  EXPECT_FALSE(datestring_in_url("https://x.example/2010041212505/"));
  EXPECT_FALSE(datestring_in_url("https://x.example/201004121250570/"));
}
