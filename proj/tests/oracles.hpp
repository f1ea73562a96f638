#pragma once

// Independent reference implementations used to cross-check the library.

#include "paley/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

/// Symmetric neighbourhood masks (either orientation counts as an edge).
inline std::vector<std::uint32_t> neighbour_masks(const paley::GenericGraph &g) {
  const auto n = g.order();
  std::vector<std::uint32_t> nb(n, 0);
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = 0; v < n; ++v)
      if (u != v && (g.has_edge(u, v) || g.has_edge(v, u)))
        nb[u] |= 1u << v;
  return nb;
}

/// Largest independent set by enumerating every subset; n <= 24.
inline std::size_t exhaustive_alpha(const paley::GenericGraph &g) {
  const auto n = g.order();
  const auto nb = neighbour_masks(g);
  std::vector<std::uint8_t> indep(std::size_t{1} << n, 0);
  indep[0] = 1;
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int low = __builtin_ctz(mask);
    const std::uint32_t rest = mask & (mask - 1);
    indep[mask] = indep[rest] && !(nb[low] & rest);
    if (indep[mask])
      best = std::max<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        off += a[i][j] * a[i][j];
    if (off < 1e-22)
      break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300)
          continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i)
    ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Prime powers up to `limit`, ascending.
inline std::vector<std::uint32_t> prime_powers(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q <= limit; ++q) {
    std::uint32_t p = 2;
    while (q % p != 0)
      ++p;
    std::uint32_t r = q;
    while (r % p == 0)
      r /= p;
    if (r == 1)
      out.push_back(q);
  }
  return out;
}

} // namespace oracle
