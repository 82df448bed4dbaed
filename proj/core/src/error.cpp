#include "mementoscope/error.hpp"

namespace mementoscope {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnparseableDate: return "UNPARSEABLE_DATE";
    case ErrorCode::kMalformedDatestring: return "MALFORMED_DATESTRING";
    case ErrorCode::kNoRedirectSupport: return "NO_REDIRECT_SUPPORT";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kRootFetchFailed: return "ROOT_FETCH_FAILED";
    case ErrorCode::kStoreConflict: return "STORE_CONFLICT";
    case ErrorCode::kCorruptStore: return "CORRUPT_STORE";
    case ErrorCode::kIoError: return "IO_ERROR";
    case ErrorCode::kMalformedTimemap: return "MALFORMED_TIMEMAP";
    case ErrorCode::kEmptyTimemap: return "EMPTY_TIMEMAP";
    case ErrorCode::kInvalidScenario: return "INVALID_SCENARIO";
    case ErrorCode::kMalformedFixture: return "MALFORMED_FIXTURE";
    case ErrorCode::kInvalidConfig: return "INVALID_CONFIG";
  }
  return "UNKNOWN";
}

}  // namespace mementoscope
