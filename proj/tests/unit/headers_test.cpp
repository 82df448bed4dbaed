#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>

#include "mementoscope/core/headers.hpp"

using namespace mementoscope;

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Reference: first header whose lower-cased name is one of the two spellings.
std::optional<std::string> reference_detect(const HeaderList& headers) {
  for (const auto& [name, value] : headers) {
    const std::string n = lower(name);
    if (n == "memento-datetime" || n == "memento_datetime") return value;
  }
  return std::nullopt;
}

}  // namespace

TEST(DetectMementoHeader, CanonicalSpelling) {
  HeaderList h{{"Memento-Datetime", "Tue, 05 Mar 2019 09:38:34 GMT"}};
  EXPECT_EQ(detect_memento_header(h), "Tue, 05 Mar 2019 09:38:34 GMT");
}

TEST(DetectMementoHeader, AbsentWhenNotPresent) {
  EXPECT_FALSE(detect_memento_header({{"Content-Type", "text/html"}}));
  EXPECT_FALSE(detect_memento_header({}));
}

TEST(DetectMementoHeader, FirstInInsertionOrder) {
  HeaderList h{{"memento-datetime", "X"}, {"Memento-Datetime", "Y"}};
  EXPECT_EQ(detect_memento_header(h), "X");
}

TEST(DetectMementoHeader, UnderscoreSpellingAndCase) {
  EXPECT_EQ(detect_memento_header({{"memento_datetime", "A"}}), "A");
  EXPECT_EQ(detect_memento_header({{"MEMENTO-DATETIME", "B"}}), "B");
  EXPECT_EQ(detect_memento_header({{"Memento_Datetime", "C"}}), "C");
}

TEST(DetectMementoHeader, LookalikesIgnored) {
  EXPECT_FALSE(detect_memento_header({{"X-Archive-Orig-Memento-Datetime", "A"}}));
  EXPECT_FALSE(detect_memento_header({{"Memento-Datetime-X", "A"}}));
  EXPECT_FALSE(detect_memento_header({{"Memento Datetime", "A"}}));
  EXPECT_FALSE(detect_memento_header({{"Link", "<x>; rel=\"memento\"; datetime=\"...\""}}));
}

// Every ordering of a mixed header list picks the same value the reference
// scan picks for that ordering.
TEST(DetectMementoHeader, AllOrderingsMatchReferenceScan) {
  HeaderList base{
      {"Content-Type", "text/html"},
      {"memento-datetime", "lower"},
      {"Memento_Datetime", "underscore"},
      {"Link", "<x>; rel=original"},
      {"MEMENTO-DATETIME", "upper"},
      {"X-Memento-Datetime", "decoy"},
  };
  std::vector<int> idx(base.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  int permutations = 0;
  do {
    HeaderList h;
    for (int i : idx) h.push_back(base[static_cast<std::size_t>(i)]);
    ASSERT_EQ(detect_memento_header(h), reference_detect(h));
    ++permutations;
  } while (std::next_permutation(idx.begin(), idx.end()));
  EXPECT_EQ(permutations, 720);
}

TEST(FindHeader, CaseInsensitive) {
  HeaderList h{{"content-location", "/a"}, {"Content-Location", "/b"}};
  EXPECT_EQ(find_header(h, "Content-Location"), "/a");
  EXPECT_FALSE(find_header(h, "Location"));
  EXPECT_TRUE(iequals("ABC", "abc"));
  EXPECT_FALSE(iequals("abc", "abcd"));
}
