// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "../oracles.hpp"

#include "paley/bounds.hpp"
#include "paley/cli.hpp"
#include "paley/graphs.hpp"
#include "paley/indep.hpp"
#include "paley/polyring.hpp"
#include "paley/rings.hpp"
#include "paley/sarkozy.hpp"
#include "paley/theta.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace paley;
using json = nlohmann::json;

namespace {

// Pinned tolerances and limits.
constexpr double kAlphaCliSeconds = 5.0;
constexpr double kRk2Seconds = 300.0;
constexpr double kThetaRelTol = 1e-9;
constexpr double kThetaProductTol = 1e-6;
constexpr double kThetaBoundTol = 1e-6;
constexpr double kConstructSeconds = 60.0;
constexpr double kLedgerTol = 1e-3;
constexpr double kThetaZmodTol = 1e-3;
constexpr double kMomentTol = 1e-6;

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct CliRun {
  int code = 0;
  json doc;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  if (!out.str().empty())
    r.doc = json::parse(out.str(), nullptr, false);
  return r;
}

RingPtr fq(std::uint32_t q) { return make_ring(RingSpec::field_of_order(q)); }

Outcome c1() {
  const auto t0 = Clock::now();
  const auto r = cli({"alpha", "--ring", "fq:7", "--k", "3", "--power", "2"});
  const double s = since(t0);
  const auto alpha = r.doc.value("alpha", 0);
  return {r.code == kExitOk && alpha == 10 && r.doc.value("exact", false) && s < kAlphaCliSeconds,
          fmt("alpha=%d exit=%d %.2fs", alpha, r.code, s)};
}

Outcome c2() {
  Outcome o;
  for (std::uint32_t k : {2u, 3u, 5u}) {
    const auto t0 = Clock::now();
    SolverOptions opts;
    opts.time_budget = std::chrono::duration<double>(kRk2Seconds);
    const auto r = alpha_product(fq(2 * k + 1), k, 2, opts);
    const double s = since(t0);
    const std::size_t want = k * k + k / 2;
    o.ok = o.ok && r.value == want && s < kRk2Seconds;
    o.detail += fmt("k=%u: %zu (want %zu, %.2fs) ", k, r.value, want, s);
  }
  return o;
}

Outcome c3() {
  Outcome o;
  for (std::uint32_t q : {5u, 9u, 13u}) {
    const auto F = fq(q);
    const auto r = alpha_product(F, 2, 2);
    const auto power = strong_power(build_paley(F, 2).to_generic(), 2);
    const bool cert = verify_independent(power, r.certificate.vertices);
    o.ok = o.ok && r.value == q && cert;
    o.detail += fmt("q=%u: %zu%s ", q, r.value, cert ? "" : " (bad certificate)");
  }
  return o;
}

Outcome c4() {
  Outcome o;
  double worst_rel = 0.0, worst_prod = 0.0;
  for (std::uint32_t q : {5u, 13u, 17u, 25u}) {
    const auto g = build_paley(fq(q), 2);
    const double t = lovasz_theta(g).value;
    const double tc = lovasz_theta(complement_cayley(g)).value;
    worst_rel = std::max(worst_rel, std::abs(t - std::sqrt(q)) / std::sqrt(q));
    worst_prod = std::max(worst_prod, std::abs(t * tc - q));
  }
  const auto g = build_paley(fq(13), 3);
  const double p13 = lovasz_theta(g).value * lovasz_theta(complement_cayley(g)).value;
  worst_prod = std::max(worst_prod, std::abs(p13 - 13.0));
  o.ok = worst_rel <= kThetaRelTol && worst_prod <= kThetaProductTol;
  o.detail = fmt("max rel err %.2e, max |theta*theta_c - q| %.2e", worst_rel, worst_prod);
  return o;
}

Outcome c5() {
  Outcome o;
  int cases = 0;
  double slack_up = 1e300, slack_lo = 1e300;
  for (auto q : oracle::prime_powers(200)) {
    const auto F = fq(q);
    for (std::uint32_t k = 2; k <= 6; ++k) {
      const auto g = build_paley(F, k);
      if (!g.symmetric())
        continue;
      ++cases;
      const double up = std::pow(q, 1.0 - 1.0 / k) - lovasz_theta(g).value;
      const double lo = lovasz_theta(complement_cayley(g)).value - std::pow(q, 1.0 / k);
      slack_up = std::min(slack_up, up);
      slack_lo = std::min(slack_lo, lo);
      if (up < -kThetaBoundTol || lo < -kThetaBoundTol) {
        o.ok = false;
        o.detail += fmt("violated at q=%u k=%u; ", q, k);
      }
    }
  }
  o.detail += fmt("%d graphs, min slack upper %.3g lower %.3g", cases, slack_up, slack_lo);
  return o;
}

Outcome c6() {
  Outcome o;
  const auto t0 = Clock::now();
  struct Case {
    std::uint32_t q, k;
    std::size_t n;
    std::uint64_t size;
  };
  for (auto c : {Case{3, 2, 4, 27}, Case{5, 2, 4, 125}, Case{7, 3, 6, 24010}}) {
    const auto A = build_sarkozy_power(SarkozyParams::make(c.q, c.k, c.n, SarkozyVariant::Power));
    const auto size = A.size_terms().exact().value_or(0);
    const auto rep = verify_no_F_difference(A);
    o.ok = o.ok && size == c.size && rep.ok && rep.members == c.size;
    if (c.q == 7)
      o.ok = o.ok && A.U().size() == 10;
    o.detail += fmt("(%u,%u,%zu): %llu %s |U|=%zu; ", c.q, c.k, c.n,
                    static_cast<unsigned long long>(size), rep.ok ? "verified" : "VIOLATION",
                    A.U().size());
  }
  const double s = since(t0);
  o.ok = o.ok && s < kConstructSeconds;
  o.detail += fmt("%.2fs", s);
  return o;
}

Outcome c7() {
  const auto led = bounds_report(7, 3, 6, 4.0 / 9.0);
  const auto rate = minimize_rate(7, 4.0 / 9.0);
  const double l1 = led.lower_thm1.value_or(0), l2 = led.lower_improved.value_or(0);
  const bool ok = std::abs(l1 - 5.0613) <= kLedgerTol && std::abs(l2 - 5.3716) <= kLedgerTol &&
                  std::abs(rate.value - 6.903) <= kLedgerTol && led.ordering_ok;
  return {ok, fmt("lower %.5f, improved %.5f, refined %.5f at t*=%.5f", l1, l2, rate.value,
                  rate.t_star)};
}

Outcome c8() {
  const auto g = build_paley(make_ring(RingSpec::zmod(65)), 2).to_generic();
  const auto s = max_independent_set(g);
  const double theta = theta_zmod(65, 2).value;
  const bool ok = verify_independent(g, s.vertices) && s.size() < std::sqrt(65.0) &&
                  std::abs(theta - 8.0623) <= kThetaZmodTol;
  return {ok, fmt("alpha=%zu < %.4f, theta=%.6f", s.size(), std::sqrt(65.0), theta)};
}

Outcome c9() {
  Outcome o;
  for (auto [m, n, k] : {std::tuple{3u, 5u, 2u}, {5u, 13u, 2u}, {5u, 13u, 3u}}) {
    const bool ok = crt_factor_check(m, n, k);
    o.ok = o.ok && ok;
    o.detail += fmt("(%u,%u,%u) %s ", m, n, k, ok ? "iso" : "NOT iso");
  }
  return o;
}

Outcome c10() {
  Outcome o;
  for (auto [q, k] : {std::pair{5u, 2u}, {7u, 3u}, {13u, 3u}}) {
    const auto F = fq(q);
    const auto d = diagonal_indep_set(F, k);
    const auto power = strong_power(complement(build_paley(F, k)), k);
    const bool ok = d.size() == q && verify_independent(power, d.vertices);
    o.ok = o.ok && ok;
    o.detail += fmt("(%u,%u): %zu %s ", q, k, d.size(), ok ? "independent" : "FAIL");
  }
  return o;
}

Outcome c11() {
  const auto greedy = greedy_construct(2, 5, 2).size();
  const auto pigeon = pigeonhole_upper(2, 5, 2);
  const auto opt = max_difference_free(2, 5, 2).size();
  const bool ok = greedy >= 4 && greedy <= pigeon && greedy <= opt && opt <= pigeon;
  return {ok, fmt("greedy %zu, optimum %zu, pigeonhole %llu", greedy, opt,
                  static_cast<unsigned long long>(pigeon))};
}

Outcome c12() {
  Outcome o;
  std::mt19937 rng(2024);
  const std::vector<std::uint32_t> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49};
  int root_failures = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto F = fq(qs[t % qs.size()]);
    const std::uint32_t k = 2 + (t / 13) % 5;
    std::vector<RingElem> coeffs(1 + rng() % 4);
    for (auto &c : coeffs)
      c = RingElem{static_cast<std::uint32_t>(rng() % F->order())};
    const auto u = PolyFq(F, coeffs).pow(k);
    const auto r = kth_root(u, k);
    if (!r || !(r->pow(k) == u))
      ++root_failures;
  }

  int solver_mismatch = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 18;
    std::bernoulli_distribution coin(0.1 + 0.8 * (rng() % 100) / 100.0);
    GenericGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng))
          g.add_undirected_edge(u, v);
    const auto s = max_independent_set(g);
    if (s.size() != oracle::exhaustive_alpha(g) || !verify_independent(g, s.vertices))
      ++solver_mismatch;
  }

  // Every undirected Paley graph built above: fields up to 200 and small moduli.
  int graphs = 0, moment_failures = 0;
  auto check = [&](const CayleyGraph &g) {
    ++graphs;
    const auto ev = cayley_spectrum(g);
    const double n = g.order(), d = g.degree();
    double s1 = 0.0, s2 = 0.0;
    for (double x : ev) {
      s1 += x;
      s2 += x * x;
    }
    const double scale = std::max(1.0, n * d);
    if (std::abs(s1) > kMomentTol * scale || std::abs(s2 - n * d) > kMomentTol * scale)
      ++moment_failures;
  };
  for (auto q : oracle::prime_powers(200))
    for (std::uint32_t k = 2; k <= 6; ++k) {
      const auto g = build_paley(fq(q), k);
      if (g.symmetric()) {
        check(g);
        check(complement_cayley(g));
      }
    }
  for (std::uint32_t m : {15u, 21u, 35u, 65u})
    for (std::uint32_t k = 2; k <= 3; ++k) {
      const auto g = build_paley(make_ring(RingSpec::zmod(m)), k);
      if (g.symmetric())
        check(g);
    }

  o.ok = root_failures == 0 && solver_mismatch == 0 && moment_failures == 0;
  o.detail = fmt("kth_root failures %d/10000, solver mismatches %d/200, moment failures %d/%d",
                 root_failures, solver_mismatch, moment_failures, graphs);
  return o;
}

// The documented command-line examples, end to end.
Outcome cli_examples() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "paley_acceptance";
  std::filesystem::create_directories(dir);
  const auto cert = (dir / "cert.json").string();
  const auto dimacs = (dir / "z65.dimacs").string();

  auto expect = [&](bool ok, const std::string &what) {
    if (!ok) {
      o.ok = false;
      o.detail += what + " failed; ";
    }
  };
  auto g = cli({"graph", "--ring", "fq:7", "--k", "3"});
  expect(g.code == kExitOk && g.doc.value("edges", 0) == 7, "graph fq:7");
  g = cli({"graph", "--ring", "zmod:65", "--k", "2", "--dimacs", dimacs});
  expect(g.code == kExitOk && std::filesystem::exists(dimacs), "graph zmod:65 dimacs");
  g = cli({"graph", "--ring", "fq:7", "--k", "3", "--power", "9"});
  expect(g.code == kExitCap, "graph cap");
  const auto th = cli({"theta", "--ring", "fq:13", "--k", "2"});
  expect(th.code == kExitOk && std::abs(th.doc.value("value", 0.0) - std::sqrt(13.0)) < 1e-9, "theta");
  const auto c = cli({"construct", "--q", "3", "--k", "2", "--n", "4", "--variant", "power", "--out", cert});
  expect(c.code == kExitOk && c.doc.value("size", 0) == 27, "construct");
  const auto v = cli({"verify", "--in", cert});
  expect(v.code == kExitOk && v.doc.value("verdict", std::string{}) == "pass", "verify");
  const auto b = cli({"bounds", "--q", "7", "--k", "3", "--n", "6", "--gamma", "4/9"});
  expect(b.code == kExitOk && b.doc.value("r_k2", 0) == 10, "bounds");
  std::filesystem::remove_all(dir);
  if (o.ok)
    o.detail = "graph, theta, construct, verify, bounds";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1  alpha(C7 x C7) via CLI", c1},
      {"2  r_{k,2}(F_{2k+1}) = k^2 + floor(k/2)", c2},
      {"3  r_{2,2}(F_q) = q", c3},
      {"4  theta of quadratic Paley graphs", c4},
      {"5  theta bounds q^{1-1/k}, q^{1/k}", c5},
      {"6  difference-free constructions", c6},
      {"7  bounds ledger (7,3)", c7},
      {"8  composite modulus 65", c8},
      {"9  CRT factorization", c9},
      {"10 diagonal independent sets", c10},
      {"11 greedy baseline (2,2,5)", c11},
      {"12 property suites", c12},
      {"cli examples", cli_examples},
  };
  int failed = 0;
  for (const auto &[name, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok)
      ++failed;
    std::printf("%s %-42s %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
                since(t0));
    std::fflush(stdout);
  }
  std::printf("%d of %zu failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
