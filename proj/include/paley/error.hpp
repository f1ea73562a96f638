#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace paley {

enum class Errc {
  InvalidArgument,
  NotPrime,
  OrderTooLarge,
  BadModulus,
  AllPowers,
  NotAField,
  ContextMismatch,
  EnumerationTooLarge,
  ProductTooLarge,
  NotCoprime,
  DirectedUnsupported,
  VertexOutOfRange,
  Timeout,
  NotEdgeTransitive,
  NotSquarefree,
  DirectedFactor,
  BadDegree,
  BadN,
  NotMonomial,
  VerificationTooLarge,
  NotApplicable,
  NotUnimodal,
  Io,
};

std::string_view errc_name(Errc code);

/// True for errors raised by the desk-scale size caps.
constexpr bool is_cap_violation(Errc code) {
  return code == Errc::OrderTooLarge || code == Errc::EnumerationTooLarge ||
         code == Errc::ProductTooLarge || code == Errc::VerificationTooLarge;
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace paley
