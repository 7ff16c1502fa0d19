#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfplot {

enum class ErrorKind {
  InvalidArgument,
  DegenerateViewpoint,
  PointAtEyePlane,
  BehindEye,
  NonFiniteSample,
  SplitTooClose,
  DegenerateImage,
  EmptyRender,
  EmptySurface,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `stage()` names the pipeline step
/// that failed ("projection", "sampling", "framing", ...) so front ends can
/// report it without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string stage, const std::string& message)
      : std::runtime_error(message), kind_(kind), stage_(std::move(stage)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }

 private:
  ErrorKind kind_;
  std::string stage_;
};

}  // namespace surfplot
