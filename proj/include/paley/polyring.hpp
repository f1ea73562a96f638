#pragma once

// Dense univariate polynomials over F_q and the spaces P_{q,n} of polynomials
// of degree < n.

#include "paley/rings.hpp"

#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paley {

inline constexpr std::uint64_t kMaxEnumeration = 10'000'000;

class PolyFq {
public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  PolyFq() = default;
  explicit PolyFq(RingPtr field);
  /// Coefficients low to high; trailing zeros are trimmed.
  PolyFq(RingPtr field, std::vector<RingElem> coeffs);

  static PolyFq constant(RingPtr field, RingElem c);
  static PolyFq monomial(RingPtr field, RingElem c, std::size_t degree);
  /// Polynomial whose coefficient vector is the base-q expansion of code
  /// (c_0 least significant).
  static PolyFq decode(RingPtr field, std::uint64_t code);

  const RingPtr &field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// kZeroDegree for the zero polynomial.
  int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of T^i (zero beyond the degree).
  RingElem coeff(std::size_t i) const;
  RingElem leading() const;
  const std::vector<RingElem> &coeffs() const { return coeffs_; }
  std::uint64_t encode() const;

  PolyFq operator+(const PolyFq &rhs) const;
  PolyFq operator-(const PolyFq &rhs) const;
  PolyFq operator*(const PolyFq &rhs) const;
  PolyFq operator-() const;
  PolyFq scaled(RingElem c) const;
  PolyFq pow(std::uint64_t e) const;

  bool operator==(const PolyFq &rhs) const;

  /// Comma-separated c_0,...,c_{n-1}; for s > 1 each coefficient is written as
  /// its base-p digits, most significant first, joined by '.'.
  std::string to_text(std::size_t n) const;
  static PolyFq parse(RingPtr field, std::string_view text);
  /// Human-readable form such as "T^3+3T^2+3T+1".
  std::string pretty() const;

private:
  void check_same_field(const PolyFq &rhs) const;
  void trim();

  RingPtr field_;
  std::vector<RingElem> coeffs_;
};

enum class ArithOp { Add, Sub, Mul };
/// Errors: ContextMismatch.
PolyFq poly_arith(const PolyFq &a, const PolyFq &b, ArithOp op);

/// F(u) by Horner composition. Errors: ContextMismatch.
PolyFq poly_eval_comp(const PolyFq &F, const PolyFq &u);

/// A polynomial b with b^k == u, or nullopt when none exists. Among the
/// candidate roots the one whose leading coefficient has the least index is
/// returned.
std::optional<PolyFq> kth_root(const PolyFq &u, std::uint32_t k);

/// Iterable view of P_{q,n}, ordered by base-q code with c_0 least significant.
class PolySpace {
public:
  /// Errors: EnumerationTooLarge when q^n > 10^7.
  PolySpace(RingPtr field, std::size_t n);

  class iterator {
  public:
    using value_type = PolyFq;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const PolySpace *space, std::uint64_t code) : space_(space), code_(code) {}

    PolyFq operator*() const { return PolyFq::decode(space_->field_, code_); }
    iterator &operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++code_;
      return tmp;
    }
    bool operator==(const iterator &rhs) const { return code_ == rhs.code_; }

  private:
    const PolySpace *space_ = nullptr;
    std::uint64_t code_ = 0;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }
  std::uint64_t size() const { return size_; }
  std::size_t n() const { return n_; }

private:
  RingPtr field_;
  std::size_t n_;
  std::uint64_t size_;
};

PolySpace enumerate_P(RingPtr field, std::size_t n);

} // namespace paley
