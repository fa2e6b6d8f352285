#include "crossflip/error.hpp"

namespace crossflip {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VoidComplex: return "VoidComplex";
    case ErrorKind::FaceNotPresent: return "FaceNotPresent";
    case ErrorKind::LabelCollision: return "LabelCollision";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::StaleEmbedding: return "StaleEmbedding";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::BadConstraint: return "BadConstraint";
    case ErrorKind::NotClosedSurface: return "NotClosedSurface";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::BadGluing: return "BadGluing";
    case ErrorKind::ColorMismatch: return "ColorMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NeedsNameMap: return "NeedsNameMap";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace crossflip
