#include "paley/theta.hpp"

#include "paley/error.hpp"
#include "paley/lp.hpp"
#include "paley/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace paley {

namespace {

// cos(2 pi a / p) with cos_table[a] == cos_table[p - a] exactly.
std::vector<double> cos_table(std::uint32_t p) {
  std::vector<double> t(p);
  for (std::uint32_t a = 0; a < p; ++a)
    t[a] = std::cos(2.0 * std::numbers::pi * std::min(a, p - a) / p);
  return t;
}

std::vector<double> sin_table(std::uint32_t p) {
  std::vector<double> t(p);
  for (std::uint32_t a = 0; a < p; ++a) {
    const std::uint32_t r = std::min(a, p - a);
    const double v = std::sin(2.0 * std::numbers::pi * r / p);
    t[a] = (a == r) ? v : -v;
  }
  return t;
}

ThetaReport theta_over_field(const CayleyGraph &g, const std::vector<double> &spectrum) {
  const RingCtx &F = g.ring();
  const std::uint32_t q = F.order();
  const std::uint32_t group = q - 1;
  const double n = q;

  ThetaReport rep;
  rep.lambda_min = spectrum.front();
  rep.lambda_max = spectrum.back();

  // Largest subgroup H = <g^e> of F_q^* with H * S = S, found as the least
  // divisor e of q-1 such that the log set is invariant under + e.
  std::vector<std::uint8_t> in_logs(group, 0);
  std::vector<std::uint32_t> logs;
  for (auto s : g.connection()) {
    logs.push_back(F.log(s));
    in_logs[logs.back()] = 1;
  }
  std::uint32_t e = group;
  for (std::uint32_t d = 1; d <= group; ++d) {
    if (group % d != 0)
      continue;
    bool invariant = std::all_of(logs.begin(), logs.end(),
                                 [&](std::uint32_t l) { return in_logs[(l + d) % group] != 0; });
    if (invariant) {
      e = d;
      break;
    }
  }
  const std::uint32_t orbit_size = group / e;
  if (logs.size() == orbit_size) {
    rep.method = ThetaMethod::Ratio;
    rep.value = ratio_bound(spectrum);
    return rep;
  }

  // Orbit LP. Characters are y -> exp(2 pi i Tr(y x) / p); the orbits of
  // nonzero y under H are the classes of log(y) mod e.
  const std::uint32_t p = F.characteristic();
  const auto cosines = cos_table(p);
  std::vector<std::uint32_t> trace(q);
  for (std::uint32_t z = 0; z < q; ++z)
    trace[z] = F.trace({z});

  std::vector<std::uint32_t> residues;
  for (auto l : logs)
    if (std::find(residues.begin(), residues.end(), l % e) == residues.end())
      residues.push_back(l % e);
  std::sort(residues.begin(), residues.end());

  const std::size_t vars = 1 + e;
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  std::vector<double> norm(vars, static_cast<double>(orbit_size));
  norm[0] = 1.0;
  A.push_back(norm);
  b.push_back(1.0);
  for (auto c : residues) {
    const RingElem rep_s = F.exp(c);
    std::vector<double> row(vars, 0.0);
    row[0] = 1.0;
    for (std::uint32_t y = 1; y < q; ++y)
      row[1 + F.log({y}) % e] += cosines[trace[F.mul({y}, rep_s).index]];
    A.push_back(std::move(row));
    b.push_back(0.0);
  }
  std::vector<double> objective(vars, 0.0);
  objective[0] = n;
  const auto lp = maximize_lp(std::move(A), std::move(b), objective);
  if (lp.status != LpStatus::Optimal)
    throw Error(Errc::InvalidArgument, "theta orbit LP did not reach an optimum");
  rep.method = ThetaMethod::OrbitLp;
  rep.value = lp.objective;
  return rep;
}

} // namespace

std::string_view theta_method_name(ThetaMethod m) {
  switch (m) {
  case ThetaMethod::Ratio: return "ratio";
  case ThetaMethod::Product: return "product";
  case ThetaMethod::ClosedForm: return "closed_form";
  case ThetaMethod::OrbitLp: return "orbit_lp";
  }
  return "unknown";
}

std::vector<double> cayley_spectrum(const CayleyGraph &g) {
  if (!g.symmetric())
    throw Error(Errc::DirectedUnsupported, "spectrum needs an undirected graph");
  const std::size_t n = g.order();
  if (n > kMaxSpectrumOrder)
    throw Error(Errc::OrderTooLarge, "spectrum limited to 2^16 vertices");
  const RingCtx &R = g.ring();
  const std::uint32_t base = R.characteristic();
  const auto cosines = cos_table(base);
  const auto sines = sin_table(base);
  const auto conn = g.connection();

  std::vector<double> spectrum(n);
  if (R.is_field() && R.spec().s > 1) {
    const std::uint32_t s = R.spec().s;
    std::vector<std::vector<std::uint32_t>> conn_digits;
    for (auto c : conn)
      conn_digits.push_back(R.digits(c));
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto yd = R.digits({y});
      double re = 0.0, im = 0.0;
      for (const auto &cd : conn_digits) {
        std::uint64_t phase = 0;
        for (std::uint32_t i = 0; i < s; ++i)
          phase += static_cast<std::uint64_t>(yd[i]) * cd[i];
        re += cosines[phase % base];
        im += sines[phase % base];
      }
      if (std::abs(im) > 1e-9)
        throw Error(Errc::InvalidArgument, "non-real eigenvalue in symmetric Cayley graph");
      spectrum[y] = re;
    }
  } else {
    for (std::uint32_t j = 0; j < n; ++j) {
      double re = 0.0, im = 0.0;
      for (auto c : conn) {
        const auto phase = static_cast<std::uint64_t>(j) * c.index % base;
        re += cosines[phase];
        im += sines[phase];
      }
      if (std::abs(im) > 1e-9)
        throw Error(Errc::InvalidArgument, "non-real eigenvalue in symmetric Cayley graph");
      spectrum[j] = re;
    }
  }
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

double ratio_bound(std::span<const double> spectrum) {
  const double lmin = *std::min_element(spectrum.begin(), spectrum.end());
  const double lmax = *std::max_element(spectrum.begin(), spectrum.end());
  const double n = static_cast<double>(spectrum.size());
  if (lmax - lmin < 1e-12)
    return n; // edgeless
  return n * (-lmin) / (lmax - lmin);
}

ThetaReport lovasz_theta(const CayleyGraph &g) {
  if (!g.symmetric())
    throw Error(Errc::DirectedUnsupported, "theta needs an undirected graph");
  const RingCtx &R = g.ring();
  const std::size_t n = g.order();

  if (!R.is_field()) {
    if (!is_prime(R.order()))
      throw Error(Errc::NotEdgeTransitive,
                  "composite modulus " + std::to_string(R.order()) + ": use theta_zmod");
    // Z/pZ and F_p share canonical indices and arithmetic.
    std::vector<std::uint8_t> mask(n, 0);
    for (auto s : g.connection())
      mask[s.index] = 1;
    return lovasz_theta(CayleyGraph(make_ring(RingSpec::field(R.order())), g.k(), std::move(mask)));
  }

  const auto spectrum = cayley_spectrum(g);
  if (g.degree() == 0 || g.degree() + 1 == n) {
    ThetaReport rep;
    rep.method = ThetaMethod::ClosedForm;
    rep.value = g.degree() == 0 ? static_cast<double>(n) : 1.0;
    rep.lambda_min = spectrum.front();
    rep.lambda_max = spectrum.back();
    return rep;
  }
  return theta_over_field(g, spectrum);
}

ThetaReport theta_zmod(std::uint32_t m, std::uint32_t k) {
  if (m < 2)
    throw Error(Errc::BadModulus, "modulus must be at least 2");
  if (!is_squarefree(m))
    throw Error(Errc::NotSquarefree, std::to_string(m) + " is not squarefree");
  ThetaReport rep;
  rep.method = ThetaMethod::Product;
  rep.value = 1.0;
  // Extremes of prod (lambda_i + 1) - 1 over the factor spectra.
  std::vector<std::pair<double, double>> ranges;
  for (const auto &pp : factorize(m)) {
    const auto p = static_cast<std::uint32_t>(pp.prime);
    const auto g = build_paley(make_ring(RingSpec::field(p)), k);
    if (!g.symmetric())
      throw Error(Errc::DirectedFactor, "Paley_" + std::to_string(k) + "(F_" + std::to_string(p) +
                                            ") is directed");
    auto factor = lovasz_theta(g);
    rep.value *= factor.value;
    ranges.emplace_back(factor.lambda_min + 1.0, factor.lambda_max + 1.0);
    rep.factors.push_back(std::move(factor));
    rep.factor_primes.push_back(p);
  }
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (std::size_t mask = 0; mask < (std::size_t{1} << ranges.size()); ++mask) {
    double prod = 1.0;
    for (std::size_t i = 0; i < ranges.size(); ++i)
      prod *= (mask >> i & 1) ? ranges[i].second : ranges[i].first;
    if (first || prod < lo)
      lo = prod;
    if (first || prod > hi)
      hi = prod;
    first = false;
  }
  rep.lambda_min = lo - 1.0;
  rep.lambda_max = hi - 1.0;
  return rep;
}

RuzsaCheck ruzsa_bound_check(std::uint32_t m, std::uint32_t k, const SolverOptions &opts) {
  if (m < 2)
    throw Error(Errc::BadModulus, "modulus must be at least 2");
  RuzsaCheck out;
  out.bound = std::pow(static_cast<double>(m), 1.0 - 1.0 / k);
  if (is_squarefree(m)) {
    const auto split = two_adic(k);
    const std::uint64_t step = std::uint64_t{1} << (split.s + 1);
    out.applicable = true;
    for (const auto &pp : factorize(m))
      if (pp.prime % step != 1)
        out.applicable = false;
  }
  if (m <= kRuzsaSolverCap) {
    const auto g = build_paley(make_ring(RingSpec::zmod(m)), k).to_generic();
    try {
      out.alpha = max_independent_set(g, opts).size();
      out.alpha_exact = true;
    } catch (const SolverTimeout &t) {
      out.alpha = t.incumbent().size();
    }
  }
  if (out.applicable && out.alpha) {
    const auto strict_cap = static_cast<std::size_t>(std::ceil(out.bound)) - 1;
    out.holds = *out.alpha <= strict_cap;
  }
  return out;
}

} // namespace paley
