#include "paley/sarkozy.hpp"

#include "paley/error.hpp"
#include "paley/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace paley {

namespace {

using CoeffKey = std::vector<std::uint32_t>;

CoeffKey key_of(const PolyFq &p) {
  CoeffKey k;
  k.reserve(p.coeffs().size());
  for (auto c : p.coeffs())
    k.push_back(c.index);
  return k;
}

// All nonzero values F(u) with u of degree < u_len, deduplicated.
std::vector<PolyFq> forbidden_shifts(const PolyFq &F, std::size_t u_len) {
  std::set<CoeffKey> seen;
  std::vector<PolyFq> out;
  for (const auto &u : enumerate_P(F.field(), u_len)) {
    PolyFq d = poly_eval_comp(F, u);
    if (d.is_zero())
      continue;
    if (seen.insert(key_of(d)).second)
      out.push_back(std::move(d));
  }
  return out;
}

std::size_t shift_length(const PolyFq &F, std::size_t ambient_n) {
  if (F.degree() < 1)
    throw Error(Errc::BadDegree, "F must have positive degree");
  if (ambient_n == 0)
    throw Error(Errc::InvalidArgument, "ambient length must be positive");
  return (ambient_n - 1) / static_cast<std::size_t>(F.degree()) + 1;
}

template <typename Contains>
VerifyReport scan(std::span<const PolyFq> members, const std::vector<PolyFq> &shifts,
                  std::uint64_t inputs, Contains &&contains) {
  VerifyReport rep;
  rep.inputs = inputs;
  rep.shifts = shifts.size();
  rep.members = members.size();
  for (const auto &a : members)
    for (const auto &d : shifts) {
      ++rep.membership_tests;
      if (contains(a + d)) {
        rep.ok = false;
        rep.violation.emplace(a, d);
        return rep;
      }
    }
  return rep;
}

void check_work(double members, std::uint64_t q, std::size_t u_len) {
  const double work = members * std::pow(static_cast<double>(q), static_cast<double>(u_len));
  if (work > static_cast<double>(kMaxVerificationWork))
    throw Error(Errc::VerificationTooLarge, "verification would need more than 10^8 membership tests");
}

} // namespace

// ---------------------------------------------------------------------------
// Params and sizes

SarkozyParams SarkozyParams::make(std::uint32_t q, std::uint32_t k, std::size_t n,
                                  SarkozyVariant variant, std::optional<PolyFq> F) {
  if (k < 2)
    throw Error(Errc::InvalidArgument, "k must be at least 2");
  if (n == 0)
    throw Error(Errc::InvalidArgument, "n must be positive");
  SarkozyParams p;
  p.q = q;
  p.k = k;
  p.n = n;
  p.variant = variant;
  auto field = make_ring(RingSpec::field_of_order(q));
  if (F) {
    if (!(F->field()->spec() == field->spec()))
      throw Error(Errc::ContextMismatch, "F is not over F_" + std::to_string(q));
    p.F = *F;
  } else {
    p.F = PolyFq::monomial(field, field->one(), k);
  }
  return p;
}

std::optional<std::uint64_t> SizeTerms::exact() const {
  try {
    const std::uint64_t a = ipow(base, static_cast<std::uint32_t>(base_exp));
    const std::uint64_t b = ipow(q, static_cast<std::uint32_t>(free_exp));
    if (a != 0 && b > UINT64_MAX / a)
      return std::nullopt;
    return a * b;
  } catch (const Error &) {
    return std::nullopt;
  }
}

double SizeTerms::log_value() const {
  return static_cast<double>(base_exp) * std::log(static_cast<double>(base)) +
         static_cast<double>(free_exp) * std::log(static_cast<double>(q));
}

// ---------------------------------------------------------------------------
// SarkozySet

SarkozySet::SarkozySet(SarkozyParams params) : params_(std::move(params)) {
  field_ = params_.F.field();
  if (params_.F.degree() != static_cast<int>(params_.k))
    throw Error(Errc::BadDegree, "deg F must equal k");
  scale_ = params_.F.leading();
}

SarkozySet SarkozySet::from_general(SarkozyParams params, std::vector<RingElem> S) {
  if (params.variant != SarkozyVariant::General)
    throw Error(Errc::InvalidArgument, "parameters are not for the general variant");
  SarkozySet out(std::move(params));
  const std::uint32_t q = out.field_->order();
  out.single_mask_.assign(q, 0);
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  for (auto s : S) {
    if (!out.field_->valid(s))
      throw Error(Errc::InvalidArgument, "S element out of range");
    out.single_mask_[out.field_->mul(s, out.scale_).index] = 1;
  }
  out.S_ = std::move(S);
  return out;
}

SarkozySet SarkozySet::from_power(SarkozyParams params, std::vector<PairElem> U) {
  if (params.variant != SarkozyVariant::Power)
    throw Error(Errc::InvalidArgument, "parameters are not for the power variant");
  if (params.n % (2 * params.k) != 0)
    throw Error(Errc::BadN, "n must be divisible by 2k");
  for (std::size_t i = 0; i < params.F.coeffs().size(); ++i)
    if (i != params.k && params.F.coeffs()[i].index != 0)
      throw Error(Errc::NotMonomial, "the pair construction needs F = b T^k");
  SarkozySet out(std::move(params));
  const std::uint32_t q = out.field_->order();
  out.pair_mask_.assign(static_cast<std::size_t>(q) * q, 0);
  std::sort(U.begin(), U.end());
  U.erase(std::unique(U.begin(), U.end()), U.end());
  for (auto [x, y] : U) {
    if (!out.field_->valid(x) || !out.field_->valid(y))
      throw Error(Errc::InvalidArgument, "U element out of range");
    const auto bx = out.field_->mul(x, out.scale_).index;
    const auto by = out.field_->mul(y, out.scale_).index;
    out.pair_mask_[static_cast<std::size_t>(bx) * q + by] = 1;
  }
  out.U_ = std::move(U);
  return out;
}

SizeTerms SarkozySet::size_terms() const {
  SizeTerms t;
  t.q = field_->order();
  const std::size_t n = params_.n, k = params_.k;
  if (params_.variant == SarkozyVariant::General) {
    t.base = S_.size();
    t.base_exp = (n + k - 1) / k;
  } else {
    t.base = U_.size();
    t.base_exp = n / (2 * k);
  }
  t.free_exp = n - (params_.variant == SarkozyVariant::General ? t.base_exp : n / k);
  return t;
}

bool SarkozySet::contains(const PolyFq &a) const {
  if (!(a.field()->spec() == field_->spec()))
    throw Error(Errc::ContextMismatch, "polynomial over a different field");
  const std::size_t n = params_.n, k = params_.k;
  if (!a.is_zero() && static_cast<std::size_t>(a.degree()) >= n)
    return false;
  if (params_.variant == SarkozyVariant::General) {
    for (std::size_t i = 0; i < n; i += k)
      if (!single_mask_[a.coeff(i).index])
        return false;
    return true;
  }
  const std::size_t q = field_->order();
  for (std::size_t i = 0; 2 * i < n; i += k)
    if (!pair_mask_[a.coeff(i).index * q + a.coeff(n - k - i).index])
      return false;
  return true;
}

void SarkozySet::for_each(const std::function<void(const PolyFq &)> &visit) const {
  const auto total = size_terms().exact();
  if (!total || *total > kMaxEnumeration)
    throw Error(Errc::EnumerationTooLarge, "set has more than 10^7 members");

  const std::size_t n = params_.n, k = params_.k;
  const std::uint32_t q = field_->order();
  // Slot kinds: free coefficient, single constrained coefficient, or a pair
  // (i, n-k-i) constrained jointly.
  struct Slot {
    enum Kind { Free, Single, Pair } kind;
    std::size_t i, j;
    std::size_t choices;
  };
  std::vector<Slot> slots;
  std::vector<RingElem> scaled_S;
  for (auto s : S_)
    scaled_S.push_back(field_->mul(s, scale_));
  std::vector<PairElem> scaled_U;
  for (auto [x, y] : U_)
    scaled_U.emplace_back(field_->mul(x, scale_), field_->mul(y, scale_));

  for (std::size_t i = 0; i < n; ++i) {
    if (i % k != 0) {
      slots.push_back({Slot::Free, i, 0, q});
    } else if (params_.variant == SarkozyVariant::General) {
      slots.push_back({Slot::Single, i, 0, scaled_S.size()});
    } else if (2 * i < n) {
      slots.push_back({Slot::Pair, i, n - k - i, scaled_U.size()});
    }
  }
  for (const auto &s : slots)
    if (s.choices == 0)
      return;

  std::vector<std::size_t> counter(slots.size(), 0);
  std::vector<RingElem> coeffs(n);
  while (true) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto &slot = slots[s];
      switch (slot.kind) {
      case Slot::Free:
        coeffs[slot.i] = {static_cast<std::uint32_t>(counter[s])};
        break;
      case Slot::Single:
        coeffs[slot.i] = scaled_S[counter[s]];
        break;
      case Slot::Pair:
        coeffs[slot.i] = scaled_U[counter[s]].first;
        coeffs[slot.j] = scaled_U[counter[s]].second;
        break;
      }
    }
    visit(PolyFq(field_, coeffs));
    std::size_t s = 0;
    for (; s < slots.size(); ++s) {
      if (++counter[s] < slots[s].choices)
        break;
      counter[s] = 0;
    }
    if (s == slots.size())
      break;
  }
}

std::vector<PolyFq> SarkozySet::materialize() const {
  std::vector<PolyFq> out;
  for_each([&](const PolyFq &p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------------------
// Builders

SarkozySet build_sarkozy_general(const SarkozyParams &params, const SolverOptions &opts) {
  if (params.F.degree() != static_cast<int>(params.k))
    throw Error(Errc::BadDegree, "deg F must equal k");
  const RingPtr &field = params.F.field();
  if (std::gcd(params.k, field->order() - 1) == 1)
    throw Error(Errc::AllPowers, "gcd(k, q-1) = 1 leaves S = {0}");
  const auto g = build_paley(field, params.k).to_generic();
  const auto best = max_independent_set(g, opts);
  // Independence is translation invariant; shift so that 0 is a member.
  const RingElem root{best.vertices.front()};
  std::vector<RingElem> S;
  for (auto v : best.vertices)
    S.push_back(field->sub({v}, root));
  return SarkozySet::from_general(params, std::move(S));
}

SarkozySet build_sarkozy_power(const SarkozyParams &params, PairSource source,
                               const SolverOptions &opts) {
  if (params.n % (2 * params.k) != 0)
    throw Error(Errc::BadN, "n must be divisible by 2k");
  if (params.F.degree() != static_cast<int>(params.k))
    throw Error(Errc::BadDegree, "deg F must equal k");
  const RingPtr &field = params.F.field();
  const IndepSet pairs = beta_pair_set(field, params.k);

  std::vector<std::vector<Vertex>> tuples = pairs.tuples;
  if (source == PairSource::Solver) {
    try {
      auto best = alpha_product(field, params.k, 2, opts);
      if (best.certificate.tuples.size() > tuples.size())
        tuples = best.certificate.tuples;
    } catch (const SolverTimeout &t) {
      if (t.incumbent().size() > tuples.size()) {
        const ProductGraph square = strong_power(build_paley(field, params.k).to_generic(), 2);
        tuples.clear();
        for (auto v : t.incumbent().vertices)
          tuples.push_back(square.tuple(v));
      }
    }
  }
  std::vector<PairElem> U;
  for (const auto &t : tuples)
    U.emplace_back(RingElem{t[0]}, RingElem{t[1]});
  return SarkozySet::from_power(params, std::move(U));
}

// ---------------------------------------------------------------------------
// Verification

VerifyReport verify_no_F_difference(const SarkozySet &A, std::optional<std::size_t> ambient_n) {
  const std::size_t n = ambient_n.value_or(A.params().n);
  const std::size_t u_len = shift_length(A.params().F, n);
  check_work(std::exp(A.size_terms().log_value()), A.field()->order(), u_len);
  const auto members = A.materialize();
  const auto shifts = forbidden_shifts(A.params().F, u_len);
  const auto inputs = ipow(A.field()->order(), static_cast<std::uint32_t>(u_len));
  return scan(members, shifts, inputs, [&](const PolyFq &p) { return A.contains(p); });
}

VerifyReport verify_no_F_difference(std::span<const PolyFq> A, const PolyFq &F, std::size_t n) {
  const std::size_t u_len = shift_length(F, n);
  check_work(static_cast<double>(A.size()), F.field()->order(), u_len);
  std::set<CoeffKey> members;
  for (const auto &a : A) {
    if (!(a.field()->spec() == F.field()->spec()))
      throw Error(Errc::ContextMismatch, "set and F over different fields");
    members.insert(key_of(a));
  }
  const auto shifts = forbidden_shifts(F, u_len);
  const auto inputs = ipow(F.field()->order(), static_cast<std::uint32_t>(u_len));
  return scan(A, shifts, inputs, [&](const PolyFq &p) {
    return (p.is_zero() || static_cast<std::size_t>(p.degree()) < n) && members.count(key_of(p)) > 0;
  });
}

// ---------------------------------------------------------------------------
// Greedy baseline and exact probe

std::vector<PolyFq> greedy_construct(std::uint32_t q, std::size_t n, std::uint32_t k) {
  if (k < 2)
    throw Error(Errc::InvalidArgument, "k must be at least 2");
  const auto field = make_ring(RingSpec::field_of_order(q));
  const PolySpace space(field, n);
  const auto F = PolyFq::monomial(field, field->one(), k);
  const auto shifts = forbidden_shifts(F, (n - 1) / k + 1);

  std::vector<std::vector<RingElem>> shift_coeffs;
  for (const auto &d : shifts) {
    std::vector<RingElem> c(n, RingElem{0});
    std::copy(d.coeffs().begin(), d.coeffs().end(), c.begin());
    shift_coeffs.push_back(std::move(c));
  }

  std::vector<std::uint8_t> forbidden(space.size(), 0);
  std::vector<PolyFq> chosen;
  std::vector<RingElem> digits(n);
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    if (forbidden[code])
      continue;
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= q)
      digits[i] = {static_cast<std::uint32_t>(c % q)};
    chosen.push_back(PolyFq(field, digits));
    for (const auto &d : shift_coeffs) {
      std::uint64_t plus = 0, minus = 0;
      for (std::size_t i = n; i-- > 0;) {
        plus = plus * q + field->add(digits[i], d[i]).index;
        minus = minus * q + field->sub(digits[i], d[i]).index;
      }
      forbidden[plus] = 1;
      forbidden[minus] = 1;
    }
  }
  return chosen;
}

std::uint64_t greedy_guarantee(std::uint32_t q, std::size_t n, std::uint32_t k) {
  if (n == 0 || k == 0)
    throw Error(Errc::InvalidArgument, "n and k must be positive");
  return ipow(q, static_cast<std::uint32_t>(n - 1 - (n - 1) / k));
}

std::uint64_t pigeonhole_upper(std::uint32_t q, std::size_t n, std::uint32_t k) {
  if (n == 0 || q < 2)
    throw Error(Errc::InvalidArgument, "need n >= 1 and q >= 2");
  std::uint64_t power = q;
  while (power < k)
    power *= q;
  if (power != k)
    throw Error(Errc::NotApplicable, "k = " + std::to_string(k) + " is not a power of q");
  return ipow(q, static_cast<std::uint32_t>(n - (n - 1) / k));
}

IndepSet max_difference_free(std::uint32_t q, std::size_t n, std::uint32_t k,
                             const SolverOptions &opts) {
  const auto field = make_ring(RingSpec::field_of_order(q));
  const PolySpace space(field, n);
  if (space.size() > kMaxDenseVertices)
    throw Error(Errc::ProductTooLarge, "P_{q,n} too large for the exact probe");
  const auto F = PolyFq::monomial(field, field->one(), k);
  const auto shifts = forbidden_shifts(F, (n - 1) / k + 1);

  GenericGraph g(space.size(), true);
  for (const auto &x : space)
    for (const auto &d : shifts) {
      // (x, y) is an edge iff x - y = d.
      const auto y = x - d;
      g.add_edge(static_cast<Vertex>(x.encode()), static_cast<Vertex>(y.encode()));
    }
  return max_independent_set(g, opts);
}

} // namespace paley
