#include "paley/bounds.hpp"

#include "paley/error.hpp"
#include "paley/numtheory.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace paley {

std::uint64_t digit_sum(std::uint64_t k, std::uint64_t q) {
  if (k < 1 || q < 2)
    throw Error(Errc::InvalidArgument, "digit_sum needs k >= 1 and q >= 2");
  std::uint64_t s = 0;
  for (; k > 0; k /= q)
    s += k % q;
  return s;
}

GreenExponent green_exponent(std::uint64_t q, std::uint32_t k) {
  if (q < 2 || k < 2)
    throw Error(Errc::InvalidArgument, "green_exponent needs q >= 2 and k >= 2");
  const double d = static_cast<double>(digit_sum(k, q));
  const double kk = static_cast<double>(k);
  GreenExponent g;
  g.c = 1.0 / (2.0 * kk * kk * d * d * std::log(static_cast<double>(q)));
  g.base = std::pow(static_cast<double>(q), 1.0 - g.c);
  return g;
}

double rate_objective(std::uint64_t q, double gamma, double t) {
  // (1 - t^q)/(1 - t) summed directly stays accurate next to t = 1.
  double geometric;
  if (q <= 4096) {
    geometric = 0.0;
    double term = 1.0;
    for (std::uint64_t j = 0; j < q; ++j, term *= t)
      geometric += term;
  } else {
    geometric = -std::expm1(static_cast<double>(q) * std::log(t)) / (1.0 - t);
  }
  return geometric / std::pow(t, static_cast<double>(q - 1) * gamma);
}

RateMinimum minimize_rate(std::uint64_t q, double gamma, double tolerance) {
  if (q < 2)
    throw Error(Errc::InvalidArgument, "q must be at least 2");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw Error(Errc::InvalidArgument, "gamma must lie in (0, 1)");
  if (!(tolerance > 0.0))
    throw Error(Errc::InvalidArgument, "tolerance must be positive");

  constexpr double lo = 1e-6, hi = 1.0 - 1e-6;
  constexpr int samples = 1000;
  std::vector<double> f(samples);
  for (int i = 0; i < samples; ++i)
    f[i] = rate_objective(q, gamma, lo + (hi - lo) * i / (samples - 1));
  int i = 1;
  const auto slack = [](double a) { return 1e-12 * std::abs(a); };
  while (i < samples && f[i] <= f[i - 1] + slack(f[i - 1]))
    ++i;
  for (; i < samples; ++i)
    if (f[i] < f[i - 1] - slack(f[i - 1]))
      throw Error(Errc::NotUnimodal, "objective is not unimodal on (0, 1)");

  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = rate_objective(q, gamma, c), fd = rate_objective(q, gamma, d);
  while (b - a > tolerance) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = rate_objective(q, gamma, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = rate_objective(q, gamma, d);
    }
  }
  RateMinimum out;
  out.t_star = (a + b) / 2.0;
  out.value = rate_objective(q, gamma, out.t_star);
  return out;
}

BoundsLedger bounds_report(std::uint64_t q, std::uint32_t k, std::size_t n, std::optional<double> gamma,
                           const SolverOptions &opts) {
  if (k < 2)
    throw Error(Errc::InvalidArgument, "k must be at least 2");
  if (n == 0)
    throw Error(Errc::InvalidArgument, "n must be positive");
  if (q > kMaxRingOrder)
    throw Error(Errc::OrderTooLarge, "q above 2^20");
  const auto field = make_ring(RingSpec::field_of_order(q));

  BoundsLedger L;
  L.q = q;
  L.k = k;
  L.n = n;
  const double qd = static_cast<double>(q), kd = k;
  const auto green = green_exponent(q, k);
  L.green_exponent = green.c;
  L.green_rate = green.base;
  L.method_limit = std::pow(qd, 1.0 - 1.0 / (kd * kd));
  if (gamma) {
    const auto m = minimize_rate(q, *gamma);
    L.gamma = gamma;
    L.refined_rate = m.value;
    L.refined_t = m.t_star;
  }

  const bool nontrivial = std::gcd<std::uint64_t>(k, q - 1) > 1;
  if (nontrivial) {
    L.lower_thm1 = std::pow(qd, 1.0 - 1.0 / (2.0 * kd));
    if (q <= kBoundsSolverMaxQ) {
      try {
        L.r_k1 = alpha_product(field, k, 1, opts).value;
        L.r_k2 = alpha_product(field, k, 2, opts).value;
        L.lower_improved = std::pow(static_cast<double>(*L.r_k2), 1.0 / (2.0 * kd)) *
                           std::pow(qd, 1.0 - 1.0 / kd);
      } catch (const Error &) {
        // Leave the solver-backed fields empty.
      }
    }
  }
  if (is_kth_power(*field, field->neg(field->one()), k)) {
    const auto exponent = static_cast<double>(n - 1 - (n - 1) / k);
    L.greedy = std::pow(qd, exponent / static_cast<double>(n));
  }

  std::vector<double> chain;
  if (L.lower_thm1)
    chain.push_back(*L.lower_thm1);
  if (L.lower_improved)
    chain.push_back(*L.lower_improved);
  chain.push_back(L.method_limit);
  chain.push_back(L.green_rate);
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (chain[i - 1] > chain[i] + 1e-9)
      L.ordering_ok = false;
  return L;
}

} // namespace paley
