#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crossflip {

enum class ErrorKind {
  VoidComplex,
  FaceNotPresent,
  LabelCollision,
  NotPure,
  NotPseudomanifold,
  SizeExceeded,
  EmptyIndexSet,
  DimMismatch,
  StaleEmbedding,
  NotBalanced,
  BadConstraint,
  NotClosedSurface,
  BadOrder,
  BadGluing,
  ColorMismatch,
  ParseError,
  NeedsNameMap,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this type; the kind is what
// callers (and the CLI exit-code mapping) branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace crossflip
