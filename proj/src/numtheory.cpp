#include "paley/numtheory.hpp"

#include "paley/error.hpp"

#include <limits>
#include <utility>

namespace paley {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0)
      continue;
    PrimePower pp{d, 0, 1};
    while (n % d == 0) {
      n /= d;
      ++pp.exponent;
      pp.value *= d;
    }
    out.push_back(pp);
  }
  if (n > 1)
    out.push_back({n, 1, n});
  return out;
}

bool is_squarefree(std::uint64_t n) {
  for (const auto &pp : factorize(n))
    if (pp.exponent > 1)
      return false;
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1)
    return std::nullopt;
  return f.front();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1)
    return std::nullopt;
  if (t < 0)
    t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
      throw Error(Errc::InvalidArgument, "integer power overflows 64 bits");
    result *= base;
  }
  return result;
}

TwoAdic two_adic(std::uint64_t k) {
  TwoAdic out{0, k};
  while (out.odd != 0 && out.odd % 2 == 0) {
    out.odd /= 2;
    ++out.s;
  }
  return out;
}

} // namespace paley
