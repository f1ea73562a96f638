#pragma once

// Finite commutative rings F_{p^s} and Z/mZ with canonical element indexing.
//
// Every element is addressed by an integer index in [0, |R|). For Z/mZ the
// index is the least nonnegative residue. For F_{p^s} the element is a residue
// polynomial c_0 + c_1 x + ... + c_{s-1} x^{s-1} modulo a fixed monic
// irreducible of degree s, and its index is c_0 + c_1 p + ... + c_{s-1} p^{s-1}.
// The irreducible is the smallest one when its non-leading coefficients are
// read as the base-p number c_{s-1} ... c_1 c_0, so F_p embeds as indices < p.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace paley {

inline constexpr std::uint32_t kMaxRingOrder = 1u << 20;

enum class RingKind { FieldQ, ZMod };

struct RingSpec {
  RingKind kind = RingKind::ZMod;
  std::uint32_t p = 0; // FieldQ only
  std::uint32_t s = 0; // FieldQ only
  std::uint32_t m = 0; // ZMod only

  static RingSpec field(std::uint32_t p, std::uint32_t s = 1);
  /// Field of order q; q must be a prime power.
  static RingSpec field_of_order(std::uint64_t q);
  static RingSpec zmod(std::uint32_t m);
  /// Parses "fq:<q>" or "zmod:<m>".
  static RingSpec parse(std::string_view text);

  std::uint64_t order() const;
  std::string to_string() const;

  bool operator==(const RingSpec &) const = default;
};

struct RingElem {
  std::uint32_t index = 0;

  auto operator<=>(const RingElem &) const = default;
};

/// The set {z^k : z in R} as a membership table plus the sorted element list.
class KthPowers {
public:
  KthPowers(std::vector<std::uint8_t> member);

  bool contains(RingElem x) const { return member_[x.index] != 0; }
  const std::vector<RingElem> &elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

private:
  std::vector<std::uint8_t> member_;
  std::vector<RingElem> elements_;
};

class RingCtx {
public:
  explicit RingCtx(const RingSpec &spec);

  RingCtx(const RingCtx &) = delete;
  RingCtx &operator=(const RingCtx &) = delete;

  const RingSpec &spec() const { return spec_; }
  std::uint32_t order() const { return order_; }
  bool is_field() const { return spec_.kind == RingKind::FieldQ; }
  /// p for fields, m for Z/mZ.
  std::uint32_t characteristic() const;
  /// Monic modulus polynomial, coefficients low to high (length s+1). Empty for Z/mZ.
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  RingElem zero() const { return {0}; }
  RingElem one() const { return {1 % order_}; }
  /// Image of an integer under Z -> R.
  RingElem from_int(std::int64_t v) const;
  bool valid(RingElem x) const { return x.index < order_; }

  RingElem add(RingElem a, RingElem b) const;
  RingElem sub(RingElem a, RingElem b) const;
  RingElem neg(RingElem a) const;
  RingElem mul(RingElem a, RingElem b) const;
  RingElem pow(RingElem a, std::uint64_t e) const;
  bool is_unit(RingElem a) const;
  /// Throws InvalidArgument for non-units.
  RingElem inv(RingElem a) const;

  /// Base-p coordinates of a field element (length s); {index} for Z/mZ.
  std::vector<std::uint32_t> digits(RingElem x) const;
  RingElem from_digits(std::span<const std::uint32_t> digits) const;

  // Field-only operations; NotAField otherwise.
  RingElem generator() const;
  std::uint32_t log(RingElem x) const;
  RingElem exp(std::uint64_t e) const;
  /// Absolute trace to F_p, returned as an integer in [0, p).
  std::uint32_t trace(RingElem x) const;

  /// Cached per k; safe to call concurrently.
  const KthPowers &kth_powers(std::uint32_t k) const;
  bool is_kth_power(RingElem x, std::uint32_t k) const;

private:
  void build_field();
  void build_zmod();

  RingSpec spec_;
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_; // length q-1
  std::vector<std::uint32_t> log_; // length q, log_[0] unused
  std::uint32_t generator_ = 0;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::uint32_t, std::shared_ptr<const KthPowers>> cache_;
};

using RingPtr = std::shared_ptr<const RingCtx>;

/// Errors: NotPrime, OrderTooLarge, BadModulus.
RingPtr make_ring(const RingSpec &spec);

std::vector<RingElem> kth_power_set(const RingCtx &ring, std::uint32_t k);
bool is_kth_power(const RingCtx &ring, RingElem x, std::uint32_t k);
/// Least-index element that is not a k-th power; AllPowers if none exists.
RingElem non_kth_power(const RingCtx &ring, std::uint32_t k);
/// Least-index generator of the multiplicative group; NotAField for Z/mZ.
RingElem generator(const RingCtx &ring);

/// Prime-power factors of m, ascending.
std::vector<std::uint32_t> crt_split(std::uint32_t m);
std::vector<std::uint32_t> crt_map(std::uint32_t x, std::span<const std::uint32_t> factors);
std::uint32_t crt_unmap(std::span<const std::uint32_t> residues,
                        std::span<const std::uint32_t> factors);

} // namespace paley
