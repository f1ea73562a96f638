#include "paley/error.hpp"

namespace paley {

std::string_view errc_name(Errc code) {
  switch (code) {
  case Errc::InvalidArgument: return "InvalidArgument";
  case Errc::NotPrime: return "NotPrime";
  case Errc::OrderTooLarge: return "OrderTooLarge";
  case Errc::BadModulus: return "BadModulus";
  case Errc::AllPowers: return "AllPowers";
  case Errc::NotAField: return "NotAField";
  case Errc::ContextMismatch: return "ContextMismatch";
  case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
  case Errc::ProductTooLarge: return "ProductTooLarge";
  case Errc::NotCoprime: return "NotCoprime";
  case Errc::DirectedUnsupported: return "DirectedUnsupported";
  case Errc::VertexOutOfRange: return "VertexOutOfRange";
  case Errc::Timeout: return "Timeout";
  case Errc::NotEdgeTransitive: return "NotEdgeTransitive";
  case Errc::NotSquarefree: return "NotSquarefree";
  case Errc::DirectedFactor: return "DirectedFactor";
  case Errc::BadDegree: return "BadDegree";
  case Errc::BadN: return "BadN";
  case Errc::NotMonomial: return "NotMonomial";
  case Errc::VerificationTooLarge: return "VerificationTooLarge";
  case Errc::NotApplicable: return "NotApplicable";
  case Errc::NotUnimodal: return "NotUnimodal";
  case Errc::Io: return "Io";
  }
  return "Unknown";
}

} // namespace paley
