#pragma once

// Spectra of abelian Cayley graphs and the Lovasz theta function of Paley
// graphs and their complements.
//
// theta of an undirected Cayley graph on an abelian group is the linear
// program  max n*a_0  over  a >= 0, sum a_chi = 1, sum a_chi Re chi(s) = 0 for
// s in S. When S is invariant under multiplication by a subgroup H of the
// units, the program collapses onto the H-orbits of characters. When S is a
// single orbit the graph is edge transitive and the optimum is the ratio
// bound n(-lambda_min)/(lambda_max - lambda_min).

#include "paley/graphs.hpp"
#include "paley/indep.hpp"

#include <optional>
#include <span>
#include <vector>

namespace paley {

inline constexpr std::size_t kMaxSpectrumOrder = 1u << 16;

enum class ThetaMethod { Ratio, Product, ClosedForm, OrbitLp };

std::string_view theta_method_name(ThetaMethod m);

struct ThetaReport {
  double value = 0.0;
  ThetaMethod method = ThetaMethod::Ratio;
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  /// Per-prime reports for composite moduli, with their primes.
  std::vector<ThetaReport> factors;
  std::vector<std::uint32_t> factor_primes;
};

/// Eigenvalues in ascending order, computed from additive characters.
/// Errors: DirectedUnsupported, OrderTooLarge above 2^16.
std::vector<double> cayley_spectrum(const CayleyGraph &g);

/// n(-lambda_min)/(lambda_max - lambda_min) for a regular graph spectrum.
double ratio_bound(std::span<const double> spectrum);

/// Errors: DirectedUnsupported; NotEdgeTransitive for composite Z/mZ.
ThetaReport lovasz_theta(const CayleyGraph &g);

/// Product of the per-prime values for squarefree m.
/// Errors: NotSquarefree, DirectedFactor.
ThetaReport theta_zmod(std::uint32_t m, std::uint32_t k);

struct RuzsaCheck {
  bool applicable = false;
  double bound = 0.0;
  std::optional<std::size_t> alpha;
  bool alpha_exact = false;
  /// alpha <= ceil(bound) - 1 whenever applicable and alpha is known.
  bool holds = true;
};

/// Largest modulus for which the check runs the exact solver.
inline constexpr std::uint32_t kRuzsaSolverCap = 400;

RuzsaCheck ruzsa_bound_check(std::uint32_t m, std::uint32_t k, const SolverOptions &opts = {});

} // namespace paley
