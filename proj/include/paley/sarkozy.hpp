#pragma once

// Difference-free sets in P_{q,n}: subsets A such that no two members differ
// by F(u) for a polynomial u, where F has degree k (F = T^k gives the k-th
// power problem).
//
// The constructions fix the coefficients at indices i = 0 mod k:
//   general: c_i ranges over b S, S an independent set of Paley_k(F_q) with 0 in S
//   power:   (c_i, c_{n-k-i}) ranges over b U for i < n/2, U independent in
//            Paley_k(F_q) x Paley_k(F_q)
// where b is the leading coefficient of F; all other coefficients are free.

#include "paley/indep.hpp"
#include "paley/polyring.hpp"

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace paley {

enum class SarkozyVariant { General, Power };

struct SarkozyParams {
  std::uint32_t q = 0;
  std::uint32_t k = 0;
  std::size_t n = 0;
  PolyFq F;
  SarkozyVariant variant = SarkozyVariant::Power;

  /// F defaults to T^k.
  static SarkozyParams make(std::uint32_t q, std::uint32_t k, std::size_t n, SarkozyVariant variant,
                            std::optional<PolyFq> F = std::nullopt);
};

/// Size written as base^base_exp * q^free_exp.
struct SizeTerms {
  std::uint64_t base = 1;
  std::size_t base_exp = 0;
  std::uint64_t q = 1;
  std::size_t free_exp = 0;

  /// Exact value; nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> exact() const;
  double log_value() const;
};

using PairElem = std::pair<RingElem, RingElem>;

class SarkozySet {
public:
  /// From an explicit certificate: S for the general variant (must contain 0),
  /// U for the power variant. Both are given unscaled.
  static SarkozySet from_general(SarkozyParams params, std::vector<RingElem> S);
  static SarkozySet from_power(SarkozyParams params, std::vector<PairElem> U);

  const SarkozyParams &params() const { return params_; }
  const RingPtr &field() const { return field_; }
  RingElem scale() const { return scale_; }
  const std::vector<RingElem> &S() const { return S_; }
  const std::vector<PairElem> &U() const { return U_; }
  SizeTerms size_terms() const;

  /// O(n) membership test; polynomials of degree >= n are never members.
  bool contains(const PolyFq &a) const;

  /// Visits every member in a fixed order. Errors: EnumerationTooLarge
  /// when the size exceeds 10^7.
  void for_each(const std::function<void(const PolyFq &)> &visit) const;
  std::vector<PolyFq> materialize() const;

private:
  SarkozySet(SarkozyParams params);

  SarkozyParams params_;
  RingPtr field_;
  RingElem scale_;
  std::vector<RingElem> S_;
  std::vector<PairElem> U_;
  std::vector<std::uint8_t> single_mask_; // q entries, b S
  std::vector<std::uint8_t> pair_mask_;   // q*q entries, b U
};

/// S is a maximum independent set of Paley_k(F_q), translated to contain 0.
/// Errors: BadDegree, AllPowers.
SarkozySet build_sarkozy_general(const SarkozyParams &params, const SolverOptions &opts = {});

enum class PairSource { Solver, BetaPair };

/// U is the solver's maximum (falling back to the (x, b x) pairs on timeout)
/// or the (x, b x) pairs directly. Errors: BadN, NotMonomial, BadDegree, AllPowers.
SarkozySet build_sarkozy_power(const SarkozyParams &params, PairSource source = PairSource::Solver,
                               const SolverOptions &opts = {});

struct VerifyReport {
  bool ok = true;
  std::uint64_t inputs = 0;     // polynomials u enumerated
  std::uint64_t shifts = 0;     // distinct nonzero values F(u)
  std::uint64_t members = 0;    // elements scanned
  std::uint64_t membership_tests = 0;
  std::optional<std::pair<PolyFq, PolyFq>> violation; // (a, F(u)) with a + F(u) in A
};

inline constexpr std::uint64_t kMaxVerificationWork = 100'000'000;

/// Brute-force oracle: enumerates u of degree < floor((ambient_n - 1)/k) + 1,
/// so that deg F(u) < ambient_n, and checks that no member plus a nonzero F(u)
/// is again a member. ambient_n defaults to params.n.
/// Errors: VerificationTooLarge.
VerifyReport verify_no_F_difference(const SarkozySet &A, std::optional<std::size_t> ambient_n = {});

/// Same oracle for an explicit list of polynomials.
VerifyReport verify_no_F_difference(std::span<const PolyFq> A, const PolyFq &F, std::size_t n);

/// Greedy scan of P_{q,n} in enumeration order, keeping a polynomial when it
/// differs from every kept one by something other than a nonzero k-th power.
/// Errors: EnumerationTooLarge.
std::vector<PolyFq> greedy_construct(std::uint32_t q, std::size_t n, std::uint32_t k);

/// q^{n-1-floor((n-1)/k)}.
std::uint64_t greedy_guarantee(std::uint32_t q, std::size_t n, std::uint32_t k);

/// q^{n - floor((n-1)/k)} for k a power of q. Errors: NotApplicable.
std::uint64_t pigeonhole_upper(std::uint32_t q, std::size_t n, std::uint32_t k);

/// Exact largest k-th-power-difference-free subset of P_{q,n}, by the solver on
/// the Cayley graph of (P_{q,n}, +) with the nonzero k-th powers as connection.
IndepSet max_difference_free(std::uint32_t q, std::size_t n, std::uint32_t k,
                             const SolverOptions &opts = {});

} // namespace paley
