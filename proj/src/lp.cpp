#include "paley/lp.hpp"

#include "paley/error.hpp"

#include <cmath>
#include <cstddef>

namespace paley {

namespace {

constexpr double kEps = 1e-11;

// Tableau rows 0..m-1 are constraints, row m the objective (reduced costs of a
// minimisation). Column `cols` holds the right-hand side.
struct Tableau {
  std::size_t m, cols;
  std::vector<std::vector<double>> t;
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    const double pv = t[r][c];
    for (auto &v : t[r])
      v /= pv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r || std::abs(t[i][c]) < kEps * 1e-3)
        continue;
      const double f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Minimises the objective row over columns [0, usable). Returns false when
  // unbounded.
  bool run(std::size_t usable) {
    while (true) {
      std::size_t enter = usable;
      for (std::size_t j = 0; j < usable; ++j)
        if (t[m][j] < -1e-10) {
          enter = j;
          break;
        }
      if (enter == usable)
        return true;
      std::size_t leave = m;
      double best = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 1e-10)
          continue;
        const double ratio = t[i][cols] / t[i][enter];
        if (leave == m || ratio < best - 1e-12 ||
            (std::abs(ratio - best) <= 1e-12 && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m)
        return false;
      pivot(leave, enter);
    }
  }
};

} // namespace

LpResult maximize_lp(std::vector<std::vector<double>> A, std::vector<double> b,
                     const std::vector<double> &c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m)
    throw Error(Errc::InvalidArgument, "LP right-hand side has wrong length");
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n)
      throw Error(Errc::InvalidArgument, "LP row has wrong length");
    if (b[i] < 0) {
      for (auto &v : A[i])
        v = -v;
      b[i] = -b[i];
    }
  }

  // Phase 1: artificials n..n+m-1.
  Tableau T{m, n + m, {}, {}};
  T.t.assign(m + 1, std::vector<double>(n + m + 1, 0.0));
  T.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      T.t[i][j] = A[i][j];
    T.t[i][n + i] = 1.0;
    T.t[i][n + m] = b[i];
    T.basis[i] = n + i;
    for (std::size_t j = 0; j < n; ++j)
      T.t[m][j] -= A[i][j];
    T.t[m][n + m] -= b[i];
  }
  T.run(n + m);
  if (-T.t[m][n + m] > 1e-9)
    return {LpStatus::Infeasible, 0.0, {}};

  // Drive zero-level artificials out of the basis; rows that cannot be
  // cleared are redundant and become inert.
  for (std::size_t i = 0; i < m; ++i) {
    if (T.basis[i] < n)
      continue;
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(T.t[i][j]) > 1e-9) {
        T.pivot(i, j);
        break;
      }
  }

  // Phase 2 objective: minimise -c.x over the original columns.
  std::fill(T.t[m].begin(), T.t[m].end(), 0.0);
  for (std::size_t j = 0; j < n; ++j)
    T.t[m][j] = -c[j];
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t bj = T.basis[i];
    if (bj >= n)
      continue;
    const double f = T.t[m][bj];
    if (f == 0.0)
      continue;
    for (std::size_t j = 0; j <= n + m; ++j)
      T.t[m][j] -= f * T.t[i][j];
  }
  if (!T.run(n))
    return {LpStatus::Unbounded, 0.0, {}};

  LpResult out;
  out.status = LpStatus::Optimal;
  out.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (T.basis[i] < n)
      out.x[T.basis[i]] = T.t[i][n + m];
  for (std::size_t j = 0; j < n; ++j)
    out.objective += c[j] * out.x[j];
  return out;
}

} // namespace paley
