#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mementoscope {

enum class ErrorCode {
  kUnparseableDate,
  kMalformedDatestring,
  kNoRedirectSupport,
  kInvalidArgument,
  kRootFetchFailed,
  kStoreConflict,
  kCorruptStore,
  kIoError,
  kMalformedTimemap,
  kEmptyTimemap,
  kInvalidScenario,
  kMalformedFixture,
  kInvalidConfig,
};

std::string_view error_code_name(ErrorCode code);

// Single exception type for every operation that can fail; callers switch on
// code() rather than on the dynamic type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace mementoscope
