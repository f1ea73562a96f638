#pragma once

// Upper and lower bounds on the largest k-th-power-difference-free subset of
// P_{q,n}, all reported as per-symbol bases (the bound is base^n).

#include "paley/indep.hpp"

#include <cstdint>
#include <optional>

namespace paley {

/// Sum of the base-q digits of k.
std::uint64_t digit_sum(std::uint64_t k, std::uint64_t q);

struct GreenExponent {
  double c = 0.0;    // 1 / (2 k^2 D_q(k)^2 ln q)
  double base = 0.0; // q^{1-c}
};

GreenExponent green_exponent(std::uint64_t q, std::uint32_t k);

struct RateMinimum {
  double t_star = 0.0;
  double value = 0.0;
};

/// Minimizes f(t) = (1 - t^q) / ((1 - t) t^{(q-1) gamma}) on [1e-6, 1 - 1e-6]
/// by golden-section search. A 1000-point scan must show one descent followed
/// by one ascent. Errors: InvalidArgument, NotUnimodal.
RateMinimum minimize_rate(std::uint64_t q, double gamma, double tolerance = 1e-10);

/// The objective of minimize_rate.
double rate_objective(std::uint64_t q, double gamma, double t);

struct BoundsLedger {
  std::uint64_t q = 0;
  std::uint32_t k = 0;
  std::size_t n = 0;
  double green_exponent = 0.0;
  double green_rate = 0.0;
  std::optional<double> gamma;
  std::optional<double> refined_rate;
  std::optional<double> refined_t;
  /// q^{1-1/(2k)}; empty when every element of F_q is a k-th power.
  std::optional<double> lower_thm1;
  /// r_{k,2}^{1/(2k)} q^{1-1/k}; empty when r_{k,2} was not computed.
  std::optional<double> lower_improved;
  std::optional<std::size_t> r_k1;
  std::optional<std::size_t> r_k2;
  /// q^{1-1/k^2}: the best base the Paley-graph method can give. The same
  /// value is conjectured to be an upper bound; that is never asserted.
  double method_limit = 0.0;
  /// (q^{n-1-floor((n-1)/k)})^{1/n}, when -1 is a k-th power in F_q.
  std::optional<double> greedy;
  /// lower_thm1 <= lower_improved <= method_limit <= green_rate over the
  /// fields present, within 1e-9.
  bool ordering_ok = true;
};

/// Errors: InvalidArgument, NotPrime. Solver errors while computing r_{k,1}
/// and r_{k,2} leave the corresponding fields empty.
BoundsLedger bounds_report(std::uint64_t q, std::uint32_t k, std::size_t n,
                           std::optional<double> gamma = std::nullopt,
                           const SolverOptions &opts = {});

/// Largest q for which bounds_report runs the solver on Paley_k(F_q)^2.
inline constexpr std::uint64_t kBoundsSolverMaxQ = 20;

} // namespace paley
