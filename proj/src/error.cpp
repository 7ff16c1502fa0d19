#include "surfplot/error.hpp"

namespace surfplot {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DegenerateViewpoint: return "DegenerateViewpoint";
    case ErrorKind::PointAtEyePlane: return "PointAtEyePlane";
    case ErrorKind::BehindEye: return "BehindEye";
    case ErrorKind::NonFiniteSample: return "NonFiniteSample";
    case ErrorKind::SplitTooClose: return "SplitTooClose";
    case ErrorKind::DegenerateImage: return "DegenerateImage";
    case ErrorKind::EmptyRender: return "EmptyRender";
    case ErrorKind::EmptySurface: return "EmptySurface";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace surfplot
