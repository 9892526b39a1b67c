#pragma once

#include <stdexcept>
#include <string>

namespace selman {

/// Failure categories surfaced by the library. Each validator documents
/// which kinds it can raise; everything else is reported, not thrown.
enum class ErrorKind {
  // numeric kernel
  DomainViolation,
  NonFinite,
  NonDifferentiable,
  NoConvergence,
  // observers / topologies
  DimensionMismatch,
  CarrierMismatch,
  NotDominated,
  BoundsNotOrdered,
  EmptyK1,
  // charts / structures
  PreconditionFailed,
  WitnessIncomplete,
  FactorInvalid,
  FactorWitnessInvalid,
  ProvenanceMissing,
  // maps
  NoTransitionRegistered,
  MissingMiddleChart,
  NotBijective,
  MissingInverseTransition,
  NotDifferentiable,
  MissingTransition,
  // paths / tangent
  ChartNotInFamily,
  FamilyMismatch,
  OutOfInterval,
  MissingRepresentative,
  BaseMismatch,
  // dynamics
  NotFixedPoint,
  NotHyperbolic,
  // instance files
  ParseError,
  UnresolvedReference,
  NonTotalTable,
  // generic
  InvalidArgument,
  CheckFailed,  // an internal cross-check disagreed; library defect or bad data
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  /// True for failures of the numeric machinery itself (as opposed to
  /// ill-formed input); the CLI maps these to a distinct exit code.
  bool numeric() const {
    switch (kind_) {
      case ErrorKind::NonFinite:
      case ErrorKind::NonDifferentiable:
      case ErrorKind::NoConvergence:
      case ErrorKind::CheckFailed:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace selman
