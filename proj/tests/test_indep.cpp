#include "expect_errc.hpp"
#include "oracles.hpp"

#include "paley/indep.hpp"
#include "paley/numtheory.hpp"
#include "paley/theta.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace paley;

namespace {

GenericGraph paley_generic(std::uint32_t q, std::uint32_t k) {
  return build_paley(make_ring(RingSpec::field_of_order(q)), k).to_generic();
}

GenericGraph complete(std::size_t n) {
  GenericGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      g.add_undirected_edge(u, v);
  return g;
}

} // namespace

TEST(Indep, SolverExamples) {
  EXPECT_EQ(max_independent_set(paley_generic(7, 3)).size(), 3u);
  const auto p13 = paley_generic(13, 2);
  EXPECT_EQ(max_independent_set(p13).size(), 3u);
  EXPECT_EQ(oracle::exhaustive_alpha(p13), 3u);
  EXPECT_EQ(max_independent_set(complete(9)).size(), 1u);
  EXPECT_EQ(max_independent_set(GenericGraph(6)).size(), 6u);
}

TEST(Indep, SolverMatchesExhaustiveOnRandomGraphs) {
  std::mt19937 rng(123);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 18;
    const double p = 0.1 + 0.8 * (rng() % 100) / 100.0;
    const bool directed = t % 3 == 0;
    GenericGraph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = directed ? 0 : u + 1; v < n; ++v)
        if (u != v && coin(rng)) {
          if (directed)
            g.add_edge(u, v);
          else
            g.add_undirected_edge(u, v);
        }
    const auto s = max_independent_set(g);
    ASSERT_EQ(s.size(), oracle::exhaustive_alpha(g)) << "graph " << t;
    ASSERT_TRUE(verify_independent(g, s.vertices));
  }
}

TEST(Indep, SolverMatchesExhaustiveOnCirculants) {
  // Vertex-transitive inputs exercise the root-fixing shortcut.
  std::mt19937 rng(321);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + rng() % 18;
    std::vector<bool> jump(n, false);
    for (std::size_t d = 1; d <= n / 2; ++d)
      if (rng() % 3 == 0)
        jump[d] = jump[n - d] = true;
    GenericGraph g(n, true);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && jump[(v + n - u) % n])
          g.add_edge(u, v);
    ASSERT_EQ(max_independent_set(g).size(), oracle::exhaustive_alpha(g)) << t;
  }
}

TEST(Indep, SolverIsDeterministic) {
  const auto g = strong_power(paley_generic(7, 3), 2).to_generic();
  const auto a = max_independent_set(g), b = max_independent_set(g);
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.graph_fingerprint, b.graph_fingerprint);
}

TEST(Indep, SolverTimeoutCarriesIncumbent) {
  const auto g = strong_power(paley_generic(31, 3), 2).to_generic();
  SolverOptions opts;
  opts.time_budget = std::chrono::milliseconds(200);
  try {
    max_independent_set(g, opts);
    FAIL() << "expected a timeout";
  } catch (const SolverTimeout &t) {
    EXPECT_EQ(t.code(), Errc::Timeout);
    EXPECT_GT(t.incumbent().size(), 0u);
    EXPECT_TRUE(verify_independent(g, t.incumbent().vertices));
  }
}

TEST(Indep, AlphaProduct) {
  const auto F7 = make_ring(RingSpec::field(7));
  const auto r = alpha_product(F7, 3, 2);
  EXPECT_EQ(r.value, 10u);
  EXPECT_TRUE(verify_independent(strong_power(paley_generic(7, 3), 2), r.certificate.vertices));
  EXPECT_EQ(alpha_product(make_ring(RingSpec::field(5)), 2, 2).value, 5u);
  EXPECT_EQ(alpha_product(make_ring(RingSpec::field(5)), 2, 1).value, 2u);
}

TEST(Indep, DirectedProductIsSymmetrizedAfterwards) {
  // Paley_2(F_3) is the directed 3-cycle; its square has independent triples
  // even though the symmetrized factor is a triangle.
  const auto F3 = make_ring(RingSpec::field(3));
  EXPECT_FALSE(build_paley(F3, 2).symmetric());
  EXPECT_EQ(alpha_product(F3, 2, 1).value, 1u);
  EXPECT_EQ(alpha_product(F3, 2, 2).value, 3u);
}

TEST(Indep, VerifyIndependent) {
  const auto c7 = paley_generic(7, 3);
  const std::vector<Vertex> good{0, 2, 4}, bad{0, 1}, dup{0, 0};
  EXPECT_TRUE(verify_independent(c7, good));
  EXPECT_FALSE(verify_independent(c7, bad));
  EXPECT_FALSE(verify_independent(c7, dup));
  const std::vector<Vertex> out{0, 9};
  EXPECT_ERRC(verify_independent(c7, out), Errc::VertexOutOfRange);
}

TEST(Indep, DiagonalConstruction) {
  for (auto [q, k] : {std::pair{5u, 2u}, {7u, 3u}, {13u, 3u}, {9u, 2u}, {13u, 4u}}) {
    const auto F = make_ring(RingSpec::field_of_order(q));
    const auto s = diagonal_indep_set(F, k);
    ASSERT_EQ(s.size(), q);
    const auto power = strong_power(complement(build_paley(F, k)), k);
    EXPECT_TRUE(verify_independent(power, s.vertices)) << q << " " << k;
  }
  const auto F7 = make_ring(RingSpec::field(7));
  const auto s = diagonal_indep_set(F7, 3);
  for (std::uint32_t x = 0; x < 7; ++x)
    EXPECT_EQ(s.tuples[x], (std::vector<Vertex>{x, 3 * x % 7, 2 * x % 7}));
  const auto s5 = diagonal_indep_set(make_ring(RingSpec::field(5)), 2);
  for (std::uint32_t x = 0; x < 5; ++x)
    EXPECT_EQ(s5.tuples[x], (std::vector<Vertex>{x, 2 * x % 5}));
}

TEST(Indep, BetaPairConstruction) {
  const auto s5 = beta_pair_set(make_ring(RingSpec::field(5)), 2);
  EXPECT_EQ(s5.tuples, (std::vector<std::vector<Vertex>>{{0, 0}, {1, 2}, {2, 4}, {3, 1}, {4, 3}}));
  for (auto [q, k] : {std::pair{5u, 2u}, {7u, 3u}, {9u, 2u}, {13u, 3u}, {25u, 4u}}) {
    const auto F = make_ring(RingSpec::field_of_order(q));
    const auto s = beta_pair_set(F, k);
    EXPECT_EQ(s.size(), q);
    EXPECT_TRUE(verify_independent(strong_power(build_paley(F, k).to_generic(), 2), s.vertices));
  }
  EXPECT_ERRC(beta_pair_set(make_ring(RingSpec::field(5)), 3), Errc::AllPowers);
}

TEST(Indep, CliqueNumber) {
  EXPECT_EQ(clique_number(paley_generic(7, 3)), 2u);
  EXPECT_EQ(clique_number(complete(5)), 5u);
  EXPECT_EQ(clique_number(paley_generic(13, 2)), 3u);
}

TEST(Indep, CliqueAtMostIndependenceForHigherPowers) {
  for (auto q : oracle::prime_powers(64))
    for (std::uint32_t k = 3; k <= 6; ++k) {
      const auto F = make_ring(RingSpec::field_of_order(q));
      const auto g = build_paley(F, k);
      if (!g.symmetric() || std::gcd(k, q - 1) == 1)
        continue;
      const auto dense = g.to_generic();
      EXPECT_LE(clique_number(dense), max_independent_set(dense).size()) << q << " " << k;
    }
}

TEST(Indep, OddCycleIndependence) {
  // Paley_k(F_{2k+1}) is the cycle C_{2k+1}. Its independence number k equals
  // q^{log k / log q}; the exponent 1 - log 2 / log q would give q / 2, which
  // is half a vertex too many.
  for (std::uint32_t k = 2; k <= 8; ++k) {
    const std::uint32_t q = 2 * k + 1;
    if (!is_prime(q))
      continue;
    const auto a = max_independent_set(paley_generic(q, k)).size();
    EXPECT_EQ(a, k);
    EXPECT_NEAR(std::pow(q, std::log(k) / std::log(q)), a, 1e-9);
    EXPECT_NEAR(std::pow(q, 1.0 - std::log(2.0) / std::log(q)), a + 0.5, 1e-9);
    if (k >= 3)
      EXPECT_GT(static_cast<double>(a), std::sqrt(q));
  }
}

TEST(Indep, Superadditivity) {
  for (auto [q, k] : {std::pair{5u, 2u}, {7u, 3u}, {9u, 2u}}) {
    const auto F = make_ring(RingSpec::field_of_order(q));
    const auto a1 = alpha_product(F, k, 1).value;
    const auto a2 = alpha_product(F, k, 2).value;
    EXPECT_GE(a2, a1 * a1);
    if (q == 5)
      EXPECT_GE(alpha_product(F, k, 3).value, a2 * a1);
  }
}

TEST(Indep, CohenBound) {
  EXPECT_DOUBLE_EQ(cohen_bound(7, 3), 1.0);
  const double big = cohen_bound(1000003, 2);
  EXPECT_GT(big, 1.0);
  double prev = 0.0;
  for (std::uint64_t q : {1009ull, 10007ull, 100003ull, 1000003ull, 10000019ull}) {
    const double v = cohen_bound(q, 2);
    EXPECT_GE(v, prev);
    prev = v;
  }
  EXPECT_ERRC(cohen_bound(11, 3), Errc::InvalidArgument);
  EXPECT_ERRC(cohen_bound(12, 2), Errc::NotPrime);
}

TEST(Indep, CapacityBounds) {
  const auto c5 = capacity_bounds(make_ring(RingSpec::field(5)), 2, 2, false);
  EXPECT_NEAR(c5.lower, std::sqrt(5.0), 1e-9);
  EXPECT_NEAR(c5.upper, std::sqrt(5.0), 1e-9);
  const auto c7 = capacity_bounds(make_ring(RingSpec::field(7)), 3, 2, false);
  EXPECT_NEAR(c7.lower, std::sqrt(10.0), 1e-9);
  EXPECT_NEAR(c7.upper, 3.3176672, 1e-6);
  EXPECT_EQ(c7.alphas, (std::vector<std::size_t>{3, 10}));
  const auto comp = capacity_bounds(make_ring(RingSpec::field(7)), 3, 3, true);
  EXPECT_GE(comp.lower, std::cbrt(7.0) - 1e-9);
  EXPECT_LE(comp.lower, comp.upper + 1e-9);
}
