#include "expect_errc.hpp"
#include "oracles.hpp"

#include "paley/numtheory.hpp"
#include "paley/theta.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

using namespace paley;

namespace {

std::vector<double> dense_spectrum(const CayleyGraph &g) {
  const auto n = g.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      a[x][y] = g.has_edge(x, y) ? 1.0 : 0.0;
  return oracle::jacobi_eigenvalues(std::move(a));
}

std::vector<CayleyGraph> undirected_field_paleys(std::uint32_t max_q, std::uint32_t max_k) {
  std::vector<CayleyGraph> out;
  for (auto q : oracle::prime_powers(max_q)) {
    const auto F = make_ring(RingSpec::field_of_order(q));
    for (std::uint32_t k = 2; k <= max_k; ++k) {
      auto g = build_paley(F, k);
      if (g.symmetric())
        out.push_back(std::move(g));
    }
  }
  return out;
}

} // namespace

TEST(Theta, SpectrumExamples) {
  const auto c7 = cayley_spectrum(build_paley(make_ring(RingSpec::field(7)), 3));
  std::vector<double> want;
  for (int j = 0; j < 7; ++j)
    want.push_back(2.0 * std::cos(2.0 * std::numbers::pi * j / 7.0));
  std::sort(want.begin(), want.end());
  for (int j = 0; j < 7; ++j)
    EXPECT_NEAR(c7[j], want[j], 1e-12);

  const auto k5 = cayley_spectrum(build_paley(make_ring(RingSpec::field(5)), 3));
  EXPECT_NEAR(k5.back(), 4.0, 1e-12);
  for (int j = 0; j < 4; ++j)
    EXPECT_NEAR(k5[j], -1.0, 1e-12);

  const auto p13 = cayley_spectrum(build_paley(make_ring(RingSpec::field(13)), 2));
  EXPECT_NEAR(p13.back(), 6.0, 1e-12);
  for (int j = 0; j < 6; ++j) {
    EXPECT_NEAR(p13[j], (-1.0 - std::sqrt(13.0)) / 2.0, 1e-12);
    EXPECT_NEAR(p13[6 + j], (-1.0 + std::sqrt(13.0)) / 2.0, 1e-12);
  }
}

TEST(Theta, SpectrumMatchesDenseEigenvalues) {
  std::vector<CayleyGraph> graphs = undirected_field_paleys(32, 6);
  for (std::uint32_t m : {15u, 21u, 26u, 35u})
    for (std::uint32_t k = 2; k <= 4; ++k) {
      auto g = build_paley(make_ring(RingSpec::zmod(m)), k);
      if (g.symmetric())
        graphs.push_back(std::move(g));
    }
  for (const auto &g : graphs) {
    const auto fast = cayley_spectrum(g);
    const auto slow = dense_spectrum(g);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i)
      ASSERT_NEAR(fast[i], slow[i], 1e-8) << g.ring().spec().to_string() << " k=" << g.k();
  }
}

TEST(Theta, SpectrumMoments) {
  auto graphs = undirected_field_paleys(256, 6);
  for (std::uint32_t m = 2; m <= 300; ++m)
    for (std::uint32_t k = 2; k <= 4; ++k) {
      auto g = build_paley(make_ring(RingSpec::zmod(m)), k);
      if (g.symmetric())
        graphs.push_back(std::move(g));
    }
  for (const auto &g : graphs) {
    const auto ev = cayley_spectrum(g);
    const double n = static_cast<double>(g.order()), d = static_cast<double>(g.degree());
    double s1 = 0.0, s2 = 0.0;
    for (double x : ev) {
      s1 += x;
      s2 += x * x;
    }
    ASSERT_NEAR(s1, 0.0, 1e-6 * std::max(1.0, n * d));
    ASSERT_NEAR(s2, n * d, 1e-6 * std::max(1.0, n * d));
    ASSERT_NEAR(ev.back(), d, 1e-9 * std::max(1.0, d));
  }
}

TEST(Theta, KnownValues) {
  EXPECT_NEAR(lovasz_theta(build_paley(make_ring(RingSpec::field(13)), 2)).value, std::sqrt(13.0), 1e-9);
  const double c = std::cos(std::numbers::pi / 7.0);
  const auto c7 = lovasz_theta(build_paley(make_ring(RingSpec::field(7)), 3));
  EXPECT_NEAR(c7.value, 7.0 * c / (1.0 + c), 1e-12);
  EXPECT_EQ(c7.method, ThetaMethod::Ratio);
  const auto kq = lovasz_theta(build_paley(make_ring(RingSpec::field(11)), 3));
  EXPECT_DOUBLE_EQ(kq.value, 1.0);
  EXPECT_EQ(kq.method, ThetaMethod::ClosedForm);
  EXPECT_NEAR(lovasz_theta(build_paley(make_ring(RingSpec::zmod(13)), 2)).value, std::sqrt(13.0), 1e-9);
}

TEST(Theta, OddCyclesMatchClosedForm) {
  for (std::uint32_t q : {5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    const double c = std::cos(std::numbers::pi / q);
    const auto t = lovasz_theta(build_paley(make_ring(RingSpec::field(q)), (q - 1) / 2));
    EXPECT_NEAR(t.value, q * c / (1.0 + c), 1e-9) << q;
  }
}

TEST(Theta, ComplementProductIdentity) {
  for (const auto &g : undirected_field_paleys(200, 6)) {
    const auto t = lovasz_theta(g).value;
    const auto tc = lovasz_theta(complement_cayley(g)).value;
    const double n = static_cast<double>(g.order());
    ASSERT_NEAR(t * tc, n, 1e-6 * n) << g.ring().spec().to_string() << " k=" << g.k();
    ASSERT_GE(t, 1.0 - 1e-9);
  }
}

TEST(Theta, PaleyUpperBound) {
  for (const auto &g : undirected_field_paleys(200, 6)) {
    const auto &F = g.ring();
    if (!is_kth_power(F, F.neg(F.one()), g.k()))
      continue;
    const double q = static_cast<double>(F.order());
    const double k = static_cast<double>(g.k());
    EXPECT_LE(lovasz_theta(g).value, std::pow(q, 1.0 - 1.0 / k) + 1e-6);
    EXPECT_GE(lovasz_theta(complement_cayley(g)).value, std::pow(q, 1.0 / k) - 1e-6);
  }
}

TEST(Theta, IndependenceBelowTheta) {
  for (const auto &g : undirected_field_paleys(50, 6)) {
    const auto a = max_independent_set(g.to_generic()).size();
    EXPECT_LE(static_cast<double>(a), lovasz_theta(g).value + 1e-6);
    const auto ac = max_independent_set(complement(g)).size();
    EXPECT_LE(static_cast<double>(ac), lovasz_theta(complement_cayley(g)).value + 1e-6);
  }
}

TEST(Theta, SquareBoundOnSolvedProducts) {
  for (auto [q, k] : {std::pair{5u, 2u}, {7u, 3u}, {9u, 2u}, {11u, 5u}, {13u, 2u}, {13u, 3u}}) {
    const auto F = make_ring(RingSpec::field_of_order(q));
    const auto r = alpha_product(F, k, 2).value;
    EXPECT_LE(r, static_cast<std::size_t>(std::floor(std::pow(q, 2.0 * (1.0 - 1.0 / k)) + 1e-9)));
    EXPECT_LE(static_cast<double>(r), std::pow(lovasz_theta(build_paley(F, k)).value, 2) + 1e-6);
  }
}

TEST(Theta, ThetaZmod) {
  EXPECT_NEAR(theta_zmod(65, 2).value, std::sqrt(65.0), 1e-9);
  EXPECT_EQ(theta_zmod(65, 2).factor_primes, (std::vector<std::uint32_t>{5, 13}));
  EXPECT_NEAR(theta_zmod(13, 2).value, lovasz_theta(build_paley(make_ring(RingSpec::field(13)), 2)).value,
              1e-12);
  EXPECT_NEAR(theta_zmod(15, 3).value, lovasz_theta(build_paley(make_ring(RingSpec::field(5)), 3)).value,
              1e-12);
  EXPECT_DOUBLE_EQ(theta_zmod(15, 3).value, 1.0);
  EXPECT_ERRC(theta_zmod(12, 2), Errc::NotSquarefree);
  EXPECT_ERRC(theta_zmod(14, 6), Errc::DirectedFactor);
}

TEST(Theta, Errors) {
  EXPECT_ERRC(lovasz_theta(build_paley(make_ring(RingSpec::zmod(65)), 2)), Errc::NotEdgeTransitive);
  EXPECT_ERRC(lovasz_theta(build_paley(make_ring(RingSpec::field(7)), 6)), Errc::DirectedUnsupported);
  EXPECT_ERRC(cayley_spectrum(build_paley(make_ring(RingSpec::field(7)), 6)), Errc::DirectedUnsupported);
}

TEST(Theta, RuzsaCheck) {
  const auto r65 = ruzsa_bound_check(65, 2);
  EXPECT_TRUE(r65.applicable);
  EXPECT_NEAR(r65.bound, std::sqrt(65.0), 1e-12);
  ASSERT_TRUE(r65.alpha);
  EXPECT_TRUE(r65.alpha_exact);
  EXPECT_LT(static_cast<double>(*r65.alpha), r65.bound);
  EXPECT_TRUE(r65.holds);

  const auto r21 = ruzsa_bound_check(21, 3);
  EXPECT_TRUE(r21.applicable);
  EXPECT_NEAR(r21.bound, std::pow(21.0, 2.0 / 3.0), 1e-12);
  EXPECT_TRUE(r21.holds);

  EXPECT_FALSE(ruzsa_bound_check(12, 2).applicable);
  EXPECT_FALSE(ruzsa_bound_check(21, 2).applicable); // 3 is not 1 mod 4
}
