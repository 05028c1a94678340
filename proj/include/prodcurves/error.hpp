#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prodcurves {

enum class ErrorKind {
  LoopEdge,
  DuplicateId,
  DanglingEndpoint,
  BadCoordinate,
  InvalidComplex,
  DimensionMismatch,
  NotASurface,
  EmptyIndexSet,
  CellNotInProjection,
  NotRamified,
  FactorizationMismatch,
  NotConnected,
  NotTwoDimensional,
  NotSimplePath,
  ArcNotInProduct,
  BadWitness,
  BadDimensionSplit,
  UnknownName,
  BadParams,
  NotExportable,
  SchemaViolation,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; kind() carries the
// contract-level error name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace prodcurves
