#pragma once

#include <stdexcept>
#include <string>

namespace youngtab {

enum class ErrorCode {
  Parse = 1,
  NotWeaklyDecreasing,
  NotContained,
  InvalidBox,
  EntryExceedsBound,
  MalformedFilling,
  WidthMismatch,
  NotSymmetric,
  NotHomogeneous,
  MalformedPair,
  InvalidArgument,
  GuardExceeded,
  Internal,
};

// Every failure raised by the library carries one of the codes above; the C
// API maps them one-to-one onto yt_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace youngtab
