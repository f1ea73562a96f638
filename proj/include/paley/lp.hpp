#pragma once

#include <vector>

namespace paley {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
};

/// maximize c.x subject to A x = b, x >= 0. Dense two-phase simplex with
/// Bland's rule; meant for the handful of orbit variables of symmetric LPs.
LpResult maximize_lp(std::vector<std::vector<double>> A, std::vector<double> b,
                     const std::vector<double> &c);

} // namespace paley
