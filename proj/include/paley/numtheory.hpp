#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace paley {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
  std::uint64_t value; // prime^exponent

  bool operator==(const PrimePower &) const = default;
};

bool is_prime(std::uint64_t n);

/// Trial-division factorization, primes ascending.
std::vector<PrimePower> factorize(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// If n = p^s for a prime p, returns {p, s}.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> inv_mod(std::uint64_t a, std::uint64_t m);

/// Exact integer power; throws InvalidArgument on 64-bit overflow.
std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

/// Splits k = 2^s * d with d odd.
struct TwoAdic {
  std::uint32_t s;
  std::uint64_t odd;
};
TwoAdic two_adic(std::uint64_t k);

} // namespace paley
