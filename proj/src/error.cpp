#include "selman/error.hpp"

namespace selman {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DomainViolation: return "DomainViolation";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NonDifferentiable: return "NonDifferentiable";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::NotDominated: return "NotDominated";
    case ErrorKind::BoundsNotOrdered: return "BoundsNotOrdered";
    case ErrorKind::EmptyK1: return "EmptyK1";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::WitnessIncomplete: return "WitnessIncomplete";
    case ErrorKind::FactorInvalid: return "FactorInvalid";
    case ErrorKind::FactorWitnessInvalid: return "FactorWitnessInvalid";
    case ErrorKind::ProvenanceMissing: return "ProvenanceMissing";
    case ErrorKind::NoTransitionRegistered: return "NoTransitionRegistered";
    case ErrorKind::MissingMiddleChart: return "MissingMiddleChart";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::MissingInverseTransition: return "MissingInverseTransition";
    case ErrorKind::NotDifferentiable: return "NotDifferentiable";
    case ErrorKind::MissingTransition: return "MissingTransition";
    case ErrorKind::ChartNotInFamily: return "ChartNotInFamily";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::OutOfInterval: return "OutOfInterval";
    case ErrorKind::MissingRepresentative: return "MissingRepresentative";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotFixedPoint: return "NotFixedPoint";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
    case ErrorKind::NonTotalTable: return "NonTotalTable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

}  // namespace selman
