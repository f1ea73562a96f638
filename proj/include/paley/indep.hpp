#pragma once

// Exact maximum independent sets, the explicit independent-set constructions
// for Paley graph products, r_{k,n} evaluation and Shannon capacity bounds.
//
// Independence is always taken in the symmetrized graph: a set is independent
// when no ordered pair of distinct members is an edge.

#include "paley/error.hpp"
#include "paley/graphs.hpp"
#include "paley/rings.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace paley {

struct IndepSet {
  std::vector<Vertex> vertices;
  /// Coordinates of each vertex when the graph is a strong product.
  std::vector<std::vector<Vertex>> tuples;
  std::uint64_t graph_fingerprint = 0;

  std::size_t size() const { return vertices.size(); }
};

struct SolverOptions {
  std::chrono::duration<double> time_budget = std::chrono::seconds(300);
  /// A proven upper bound on alpha; the search stops once it is attained.
  std::optional<std::size_t> known_upper_bound;
  /// An independent set used as the starting incumbent.
  std::vector<Vertex> seed;
  /// Fix vertex 0 in the optimum when the graph promises vertex transitivity.
  bool exploit_transitivity = true;
};

struct SolverStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Thrown when the time budget runs out; carries the best set found.
class SolverTimeout : public Error {
public:
  SolverTimeout(IndepSet incumbent, SolverStats stats)
      : Error(Errc::Timeout, "solver budget exhausted with incumbent of size " +
                                 std::to_string(incumbent.size())),
        incumbent_(std::move(incumbent)), stats_(stats) {}

  const IndepSet &incumbent() const { return incumbent_; }
  const SolverStats &stats() const { return stats_; }

private:
  IndepSet incumbent_;
  SolverStats stats_;
};

/// Maximum independent set by bit-parallel branch and bound with a greedy
/// colouring bound. Deterministic for a fixed graph and options.
IndepSet max_independent_set(const GenericGraph &g, const SolverOptions &opts = {},
                             SolverStats *stats = nullptr);

/// Errors: VertexOutOfRange. Duplicate members make the certificate invalid.
bool verify_independent(const GenericGraph &g, std::span<const Vertex> set);
bool verify_independent(const ProductGraph &g, std::span<const Vertex> set);

/// r_{k,n}(R) = alpha(Paley_k(R)^{x n}).
struct AlphaResult {
  std::size_t value = 0;
  IndepSet certificate;
  SolverStats stats;
};
AlphaResult alpha_product(RingPtr ring, std::uint32_t k, std::size_t n,
                          const SolverOptions &opts = {});

/// {(x, b x, b^2 x, ..., b^{k-1} x)} in complement(Paley_k(F_q))^{x k}, with b
/// the least generator of F_q^*. Vertices are ids in strong_power(complement, k).
IndepSet diagonal_indep_set(RingPtr field, std::uint32_t k);

/// {(x, b x)} in Paley_k(F_q)^{x 2} with b the least non-k-th power.
/// Errors: AllPowers.
IndepSet beta_pair_set(RingPtr field, std::uint32_t k);

std::size_t clique_number(const GenericGraph &g, const SolverOptions &opts = {});

/// Cohen's clique lower bound p/((p-1) ln d) (ln q / 2 - 2 ln ln q) - 1 with
/// d = gcd(k, q-1), clamped below at 1. Errors: InvalidArgument when d < 2.
double cohen_bound(std::uint64_t q, std::uint32_t k);

struct CapacityBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t n_used = 0;
  /// Best independent set size found for each power 1..max_n.
  std::vector<std::size_t> alphas;
  /// Whether alphas[i] is proven optimal.
  std::vector<bool> exact;
};

/// Sandwich for the Shannon capacity of Paley_k(R) or its complement: lower
/// from independent sets in strong powers (explicit constructions seed the
/// solver), upper from the Lovasz theta value.
CapacityBounds capacity_bounds(RingPtr ring, std::uint32_t k, std::size_t max_n, bool complement,
                               const SolverOptions &opts = {});

} // namespace paley
