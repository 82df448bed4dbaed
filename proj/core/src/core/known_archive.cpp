#include "mementoscope/core/known_archive.hpp"

#include <set>

#include "mementoscope/url.hpp"

namespace mementoscope {

bool KnownArchive::matches_host(std::string_view host) const {
  for (const auto& pattern : host_patterns) {
    if (host_matches_suffix(host, pattern)) return true;
  }
  return false;
}

std::string_view redirect_style_name(RedirectStyle s) {
  return s == RedirectStyle::kNearestDatetime ? "NEAREST_DATETIME" : "NONE";
}

std::optional<RedirectStyle> redirect_style_from_name(std::string_view name) {
  if (name == "NEAREST_DATETIME") return RedirectStyle::kNearestDatetime;
  if (name == "NONE") return RedirectStyle::kNone;
  return std::nullopt;
}

std::string_view submit_method_name(SubmitMethod m) {
  return m == SubmitMethod::kGetAppend ? "GET_APPEND" : "POST_FORM";
}

std::optional<SubmitMethod> submit_method_from_name(std::string_view name) {
  if (name == "GET_APPEND") return SubmitMethod::kGetAppend;
  if (name == "POST_FORM") return SubmitMethod::kPostForm;
  return std::nullopt;
}

std::vector<KnownArchive> default_known_archives() {
  auto replay_only = [](std::string id, std::string name, std::vector<std::string> hosts) {
    KnownArchive a;
    a.id = std::move(id);
    a.display_name = std::move(name);
    a.host_patterns = std::move(hosts);
    return a;
  };

  std::vector<KnownArchive> out;
  out.push_back(replay_only("archive_it", "Archive-It", {"archive-it.org"}));

  KnownArchive archive_today = replay_only(
      std::string(archive_ids::kArchiveToday), "Archive.today",
      {"archive.today", "archive.is", "archive.ph", "archive.li", "archive.vn", "archive.fo",
       "archive.md"});
  archive_today.redirect_style = RedirectStyle::kNearestDatetime;
  archive_today.replay_base = "https://archive.is";
  archive_today.submit = SubmitEndpoint{SubmitMethod::kPostForm, "https://archive.is/submit/"};
  out.push_back(std::move(archive_today));

  KnownArchive trove =
      replay_only(std::string(archive_ids::kTrove), "Australian Web Archive (Trove)",
                  {"webarchive.nla.gov.au", "trove.nla.gov.au"});
  trove.iframe_display = true;
  out.push_back(std::move(trove));

  out.push_back(replay_only("banq", "BAnQ", {"banq.qc.ca"}));
  out.push_back(replay_only("bibalex", "Bibliotheca Alexandrina Web Archive", {"bibalex.org"}));
  out.push_back(replay_only("icelandic", "Icelandic Web Archive", {"vefsafn.is"}));

  KnownArchive ia = replay_only(std::string(archive_ids::kInternetArchive), "Internet Archive",
                                {"web.archive.org", "wayback.archive.org"});
  ia.redirect_style = RedirectStyle::kNearestDatetime;
  ia.replay_base = "https://web.archive.org/web";
  ia.submit = SubmitEndpoint{SubmitMethod::kGetAppend, "https://web.archive.org/save/"};
  out.push_back(std::move(ia));

  out.push_back(replay_only("lac", "Library and Archives Canada", {"bac-lac.gc.ca"}));
  out.push_back(replay_only("loc", "Library of Congress", {"webarchive.loc.gov"}));
  out.push_back(
      replay_only("nrscotland", "National Records of Scotland", {"webarchive.nrscotland.gov.uk"}));

  KnownArchive perma = replay_only(std::string(archive_ids::kPermaCc), "Perma.cc", {"perma.cc"});
  perma.iframe_display = true;
  out.push_back(std::move(perma));

  out.push_back(replay_only("arquivo", "Portuguese Web Archive", {"arquivo.pt"}));
  out.push_back(replay_only("stanford", "Stanford Web Archive", {"swap.stanford.edu"}));
  out.push_back(replay_only("ukgwa", "UK National Archives Web Archive",
                            {"webarchive.nationalarchives.gov.uk"}));
  out.push_back(
      replay_only("ukparliament", "UK Parliament Web Archive", {"webarchive.parliament.uk"}));
  out.push_back(replay_only("ukwa", "UK Web Archive", {"webarchive.org.uk"}));

  KnownArchive megalodon =
      replay_only(std::string(archive_ids::kMegalodon), "Megalodon", {"megalodon.jp"});
  megalodon.submit =
      SubmitEndpoint{SubmitMethod::kPostForm, "https://megalodon.jp/pc/get_simple/decide"};
  out.push_back(std::move(megalodon));
  return out;
}

const KnownArchive* find_archive_by_id(const std::vector<KnownArchive>& archives,
                                       std::string_view id) {
  for (const auto& a : archives) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

const KnownArchive* find_archive_for_url(const std::vector<KnownArchive>& archives,
                                         std::string_view url) {
  const std::string host = url_host(url);
  if (host.empty()) return nullptr;
  for (const auto& a : archives) {
    if (a.matches_host(host)) return &a;
  }
  return nullptr;
}

std::optional<std::string> validate_archives(const std::vector<KnownArchive>& archives) {
  std::set<std::string_view> ids;
  for (const auto& a : archives) {
    if (a.id.empty()) return std::string("archive with empty id");
    if (!ids.insert(a.id).second) return "duplicate archive id '" + a.id + "'";
    if (a.host_patterns.empty()) return "archive '" + a.id + "' has no host patterns";
    if (a.redirect_style == RedirectStyle::kNearestDatetime && !a.replay_base) {
      return "archive '" + a.id + "' redirects by datetime but has no replay_base";
    }
  }
  return std::nullopt;
}

}  // namespace mementoscope
