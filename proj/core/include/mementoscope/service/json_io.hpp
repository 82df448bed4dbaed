#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "mementoscope/archive/bookmark_archive.hpp"
#include "mementoscope/archive/jobs.hpp"
#include "mementoscope/core/classify.hpp"
#include "mementoscope/core/frame_tree.hpp"
#include "mementoscope/core/known_archive.hpp"
#include "mementoscope/fetch/fetcher.hpp"
#include "mementoscope/timemap/offset.hpp"

namespace mementoscope {

using Json = nlohmann::json;

// {"raw": "...", "datetime": "2010-04-12T12:50:57Z" | null}
Json datetime_to_json(const MementoDatetime& dt);
MementoDatetime datetime_from_json(const Json& j);

Json frame_node_to_json(const FrameNode& node);
FrameNode frame_node_from_json(const Json& j);
Json frame_tree_to_json(const FrameTree& tree);
FrameTree frame_tree_from_json(const Json& j);

Json classification_to_json(const PageClassification& c);
PageClassification classification_from_json(const Json& j);

Json resource_datetimes_to_json(const std::vector<ResourceDatetime>& entries);

// Config documents. The *_from_json functions throw Error(kInvalidConfig).
Json known_archive_to_json(const KnownArchive& a);
KnownArchive known_archive_from_json(const Json& j);
Json known_archives_to_json(const std::vector<KnownArchive>& archives);
Json fetch_config_to_json(const FetchConfig& cfg);
FetchConfig fetch_config_from_json(const Json& j, FetchConfig base = {});

Json job_to_json(const ArchiveJob& job);
Json mutation_to_json(const BookmarkMutation& m);
Json offset_result_to_json(const OffsetExperimentResult& r);

}  // namespace mementoscope
