#include "paley/rings.hpp"

#include "paley/error.hpp"
#include "paley/numtheory.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace paley {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Remainder of a modulo a monic divisor over F_p, in place.
void reduce_monic(Coeffs &a, const Coeffs &divisor, std::uint32_t p) {
  const std::size_t dd = divisor.size() - 1;
  for (std::size_t i = a.size(); i-- > dd;) {
    const std::uint32_t c = a[i];
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      auto &t = a[i - dd + j];
      t = static_cast<std::uint32_t>((t + static_cast<std::uint64_t>(p - c) * divisor[j]) % p);
    }
  }
  a.resize(std::min(a.size(), dd));
}

bool irreducible(const Coeffs &f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      Coeffs g(d + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i, c /= p)
        g[i] = static_cast<std::uint32_t>(c % p);
      g[d] = 1;
      Coeffs r = f;
      reduce_monic(r, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t v) { return v == 0; }))
        return false;
    }
  }
  return true;
}

} // namespace

// ---------------------------------------------------------------------------
// RingSpec

RingSpec RingSpec::field(std::uint32_t p, std::uint32_t s) {
  RingSpec spec;
  spec.kind = RingKind::FieldQ;
  spec.p = p;
  spec.s = s;
  return spec;
}

RingSpec RingSpec::field_of_order(std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp)
    throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  if (pp->value > kMaxRingOrder)
    throw Error(Errc::OrderTooLarge, "field order " + std::to_string(q) + " exceeds 2^20");
  return field(static_cast<std::uint32_t>(pp->prime), pp->exponent);
}

RingSpec RingSpec::zmod(std::uint32_t m) {
  RingSpec spec;
  spec.kind = RingKind::ZMod;
  spec.m = m;
  return spec;
}

RingSpec RingSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(Errc::InvalidArgument, "ring must be fq:<q> or zmod:<m>");
  const auto kind = text.substr(0, colon);
  const auto num = text.substr(colon + 1);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc{} || ptr != num.data() + num.size())
    throw Error(Errc::InvalidArgument, "bad ring size '" + std::string(num) + "'");
  if (kind == "fq")
    return field_of_order(value);
  if (kind == "zmod") {
    if (value > kMaxRingOrder)
      throw Error(Errc::OrderTooLarge, "modulus exceeds 2^20");
    return zmod(static_cast<std::uint32_t>(value));
  }
  throw Error(Errc::InvalidArgument, "unknown ring kind '" + std::string(kind) + "'");
}

std::uint64_t RingSpec::order() const {
  if (kind == RingKind::ZMod)
    return m;
  return ipow(p, s);
}

std::string RingSpec::to_string() const {
  if (kind == RingKind::ZMod)
    return "zmod:" + std::to_string(m);
  return "fq:" + std::to_string(order());
}

// ---------------------------------------------------------------------------
// KthPowers

KthPowers::KthPowers(std::vector<std::uint8_t> member) : member_(std::move(member)) {
  for (std::uint32_t i = 0; i < member_.size(); ++i)
    if (member_[i])
      elements_.push_back({i});
}

// ---------------------------------------------------------------------------
// RingCtx

RingCtx::RingCtx(const RingSpec &spec) : spec_(spec) {
  if (spec.kind == RingKind::ZMod)
    build_zmod();
  else
    build_field();
}

void RingCtx::build_zmod() {
  if (spec_.m < 2)
    throw Error(Errc::BadModulus, "modulus must be at least 2");
  if (spec_.m > kMaxRingOrder)
    throw Error(Errc::OrderTooLarge, "modulus exceeds 2^20");
  order_ = spec_.m;
}

void RingCtx::build_field() {
  const std::uint32_t p = spec_.p;
  const std::uint32_t s = spec_.s;
  if (!is_prime(p))
    throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (s == 0)
    throw Error(Errc::InvalidArgument, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > kMaxRingOrder)
      throw Error(Errc::OrderTooLarge, "field order exceeds 2^20");
  }
  order_ = static_cast<std::uint32_t>(q);

  if (s == 1) {
    modulus_ = {0, 1};
  } else {
    const std::uint64_t count = ipow(p, s);
    for (std::uint64_t code = 0; code < count && modulus_.empty(); ++code) {
      Coeffs f(s + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < s; ++i, c /= p)
        f[i] = static_cast<std::uint32_t>(c % p);
      f[s] = 1;
      if (irreducible(f, p))
        modulus_ = std::move(f);
    }
    if (modulus_.empty())
      throw Error(Errc::InvalidArgument, "no irreducible modulus found");
  }

  // Multiplication by residue polynomials before the log tables exist.
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (s == 1)
      return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    Coeffs da = digits({a}), db = digits({b});
    Coeffs prod(2 * s - 1, 0);
    for (std::uint32_t i = 0; i < s; ++i)
      for (std::uint32_t j = 0; j < s; ++j)
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
    reduce_monic(prod, modulus_, p);
    return from_digits(prod).index;
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t result = 1;
    while (e > 0) {
      if (e & 1)
        result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  };

  const std::uint32_t group = order_ - 1;
  const auto prime_factors = factorize(group);
  generator_ = 0;
  for (std::uint32_t g = 1; g < order_ && generator_ == 0; ++g) {
    bool ok = true;
    for (const auto &pf : prime_factors)
      if (slow_pow(g, group / pf.prime) == 1) {
        ok = false;
        break;
      }
    if (ok)
      generator_ = g;
  }

  exp_.assign(group, 0);
  log_.assign(order_, 0);
  std::vector<std::uint8_t> seen(order_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    if (seen[x])
      throw Error(Errc::InvalidArgument, "generator has order below q-1");
    seen[x] = 1;
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, generator_);
  }
  if (x != 1)
    throw Error(Errc::InvalidArgument, "exp table does not close");
}

std::uint32_t RingCtx::characteristic() const { return is_field() ? spec_.p : spec_.m; }

RingElem RingCtx::from_int(std::int64_t v) const {
  const std::int64_t c = characteristic();
  std::int64_t r = v % c;
  if (r < 0)
    r += c;
  return {static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> RingCtx::digits(RingElem x) const {
  if (!is_field())
    return {x.index};
  std::vector<std::uint32_t> out(spec_.s);
  std::uint32_t v = x.index;
  for (auto &d : out) {
    d = v % spec_.p;
    v /= spec_.p;
  }
  return out;
}

RingElem RingCtx::from_digits(std::span<const std::uint32_t> ds) const {
  if (!is_field())
    return {ds.empty() ? 0u : ds.front() % order_};
  std::uint32_t v = 0;
  for (std::size_t i = std::min<std::size_t>(ds.size(), spec_.s); i-- > 0;)
    v = v * spec_.p + ds[i] % spec_.p;
  return {v};
}

RingElem RingCtx::add(RingElem a, RingElem b) const {
  if (!is_field() || spec_.s == 1) {
    const std::uint32_t n = order_;
    std::uint32_t r = a.index + b.index;
    return {r >= n ? r - n : r};
  }
  const std::uint32_t p = spec_.p;
  std::uint32_t result = 0, place = 1;
  std::uint32_t x = a.index, y = b.index;
  for (std::uint32_t i = 0; i < spec_.s; ++i) {
    result += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return {result};
}

RingElem RingCtx::neg(RingElem a) const {
  if (!is_field() || spec_.s == 1)
    return {a.index == 0 ? 0 : order_ - a.index};
  const std::uint32_t p = spec_.p;
  std::uint32_t result = 0, place = 1, x = a.index;
  for (std::uint32_t i = 0; i < spec_.s; ++i) {
    result += ((p - x % p) % p) * place;
    x /= p;
    place *= p;
  }
  return {result};
}

RingElem RingCtx::sub(RingElem a, RingElem b) const { return add(a, neg(b)); }

RingElem RingCtx::mul(RingElem a, RingElem b) const {
  if (!is_field())
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.index) * b.index % order_)};
  if (a.index == 0 || b.index == 0)
    return {0};
  const std::uint32_t group = order_ - 1;
  std::uint32_t e = log_[a.index] + log_[b.index];
  if (e >= group)
    e -= group;
  return {exp_[e]};
}

RingElem RingCtx::pow(RingElem a, std::uint64_t e) const {
  if (!is_field())
    return {static_cast<std::uint32_t>(pow_mod(a.index, e, order_))};
  if (e == 0)
    return one();
  if (a.index == 0)
    return zero();
  const std::uint64_t group = order_ - 1;
  return {exp_[static_cast<std::uint32_t>(mul_mod(log_[a.index], e % group, group))]};
}

bool RingCtx::is_unit(RingElem a) const {
  if (is_field())
    return a.index != 0;
  return std::gcd(a.index, order_) == 1;
}

RingElem RingCtx::inv(RingElem a) const {
  if (!is_unit(a))
    throw Error(Errc::InvalidArgument, "element " + std::to_string(a.index) + " is not a unit");
  if (!is_field())
    return {static_cast<std::uint32_t>(*inv_mod(a.index, order_))};
  const std::uint32_t group = order_ - 1;
  return {exp_[(group - log_[a.index]) % group]};
}

RingElem RingCtx::generator() const {
  if (!is_field())
    throw Error(Errc::NotAField, spec_.to_string() + " is not a field");
  return {generator_};
}

std::uint32_t RingCtx::log(RingElem x) const {
  if (!is_field())
    throw Error(Errc::NotAField, spec_.to_string() + " is not a field");
  if (x.index == 0)
    throw Error(Errc::InvalidArgument, "log of zero");
  return log_[x.index];
}

RingElem RingCtx::exp(std::uint64_t e) const {
  if (!is_field())
    throw Error(Errc::NotAField, spec_.to_string() + " is not a field");
  return {exp_[e % (order_ - 1)]};
}

std::uint32_t RingCtx::trace(RingElem x) const {
  if (!is_field())
    throw Error(Errc::NotAField, spec_.to_string() + " is not a field");
  RingElem sum = zero(), term = x;
  for (std::uint32_t i = 0; i < spec_.s; ++i) {
    sum = add(sum, term);
    term = pow(term, spec_.p);
  }
  // The trace lies in the prime subfield, which is indexed by [0, p).
  return sum.index;
}

const KthPowers &RingCtx::kth_powers(std::uint32_t k) const {
  std::lock_guard lock(cache_mutex_);
  auto it = cache_.find(k);
  if (it != cache_.end())
    return *it->second;

  std::vector<std::uint8_t> member(order_, 0);
  member[0] = 1;
  if (is_field()) {
    const std::uint32_t group = order_ - 1;
    const std::uint32_t d = std::gcd(k, group);
    for (std::uint32_t e = 0; e < group; e += d)
      member[exp_[e]] = 1;
  } else {
    for (std::uint32_t z = 0; z < order_; ++z)
      member[pow({z}, k).index] = 1;
  }
  auto table = std::make_shared<const KthPowers>(std::move(member));
  return *cache_.emplace(k, std::move(table)).first->second;
}

bool RingCtx::is_kth_power(RingElem x, std::uint32_t k) const {
  if (x.index == 0)
    return true;
  if (is_field())
    return log_[x.index] % std::gcd(k, order_ - 1) == 0;
  return kth_powers(k).contains(x);
}

// ---------------------------------------------------------------------------
// Free functions

RingPtr make_ring(const RingSpec &spec) { return std::make_shared<const RingCtx>(spec); }

std::vector<RingElem> kth_power_set(const RingCtx &ring, std::uint32_t k) {
  if (k < 2)
    throw Error(Errc::InvalidArgument, "k must be at least 2");
  return ring.kth_powers(k).elements();
}

bool is_kth_power(const RingCtx &ring, RingElem x, std::uint32_t k) {
  return ring.is_kth_power(x, k);
}

RingElem non_kth_power(const RingCtx &ring, std::uint32_t k) {
  for (std::uint32_t i = 0; i < ring.order(); ++i)
    if (!ring.is_kth_power({i}, k))
      return {i};
  throw Error(Errc::AllPowers, "every element of " + ring.spec().to_string() + " is a " +
                                   std::to_string(k) + "-th power");
}

RingElem generator(const RingCtx &ring) { return ring.generator(); }

std::vector<std::uint32_t> crt_split(std::uint32_t m) {
  if (m < 2)
    throw Error(Errc::BadModulus, "modulus must be at least 2");
  std::vector<std::uint32_t> out;
  for (const auto &pp : factorize(m))
    out.push_back(static_cast<std::uint32_t>(pp.value));
  return out;
}

std::vector<std::uint32_t> crt_map(std::uint32_t x, std::span<const std::uint32_t> factors) {
  std::vector<std::uint32_t> out;
  out.reserve(factors.size());
  for (auto f : factors)
    out.push_back(x % f);
  return out;
}

std::uint32_t crt_unmap(std::span<const std::uint32_t> residues,
                        std::span<const std::uint32_t> factors) {
  if (residues.size() != factors.size())
    throw Error(Errc::InvalidArgument, "residue and factor counts differ");
  std::uint64_t m = 1;
  for (auto f : factors)
    m *= f;
  std::uint64_t x = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::uint64_t rest = m / factors[i];
    auto inv = inv_mod(rest % factors[i], factors[i]);
    if (!inv)
      throw Error(Errc::NotCoprime, "CRT factors are not pairwise coprime");
    const std::uint64_t term = mul_mod(mul_mod(residues[i] % factors[i], *inv, m), rest, m);
    x = (x + term) % m;
  }
  return static_cast<std::uint32_t>(x);
}

} // namespace paley
