#include "paley/polyring.hpp"

#include "paley/error.hpp"
#include "paley/numtheory.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace paley {

namespace {

std::uint32_t parse_uint(std::string_view token) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw Error(Errc::InvalidArgument, "bad coefficient '" + std::string(token) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return out;
}

// Least-index field element r with r^k0 == c, if any (c nonzero).
std::optional<RingElem> field_root(const RingCtx &F, RingElem c, std::uint32_t k0) {
  const std::uint64_t group = F.order() - 1;
  const std::uint64_t L = F.log(c);
  const std::uint64_t d = std::gcd<std::uint64_t>(k0, group);
  if (L % d != 0)
    return std::nullopt;
  const std::uint64_t g = group / d;
  const std::uint64_t kk = (k0 / d) % g;
  const std::uint64_t y0 = g == 1 ? 0 : mul_mod((L / d) % g, *inv_mod(kk, g), g);
  std::optional<RingElem> best;
  for (std::uint64_t j = 0; j < d; ++j) {
    const RingElem r = F.exp(y0 + j * g);
    if (!best || r < *best)
      best = r;
  }
  return best;
}

} // namespace

PolyFq::PolyFq(RingPtr field) : field_(std::move(field)) {
  if (!field_ || !field_->is_field())
    throw Error(Errc::NotAField, "polynomials require a field context");
}

PolyFq::PolyFq(RingPtr field, std::vector<RingElem> coeffs) : PolyFq(std::move(field)) {
  coeffs_ = std::move(coeffs);
  for (auto c : coeffs_)
    if (!field_->valid(c))
      throw Error(Errc::InvalidArgument, "coefficient out of range");
  trim();
}

PolyFq PolyFq::constant(RingPtr field, RingElem c) {
  return PolyFq(std::move(field), std::vector<RingElem>{c});
}

PolyFq PolyFq::monomial(RingPtr field, RingElem c, std::size_t degree) {
  std::vector<RingElem> coeffs(degree + 1, RingElem{0});
  coeffs[degree] = c;
  return PolyFq(std::move(field), std::move(coeffs));
}

PolyFq PolyFq::decode(RingPtr field, std::uint64_t code) {
  PolyFq out(std::move(field));
  const std::uint32_t q = out.field_->order();
  while (code > 0) {
    out.coeffs_.push_back({static_cast<std::uint32_t>(code % q)});
    code /= q;
  }
  out.trim();
  return out;
}

void PolyFq::trim() {
  while (!coeffs_.empty() && coeffs_.back().index == 0)
    coeffs_.pop_back();
}

void PolyFq::check_same_field(const PolyFq &rhs) const {
  if (!field_ || !rhs.field_ || !(field_->spec() == rhs.field_->spec()))
    throw Error(Errc::ContextMismatch, "polynomials over different fields");
}

RingElem PolyFq::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : RingElem{0}; }

RingElem PolyFq::leading() const { return is_zero() ? RingElem{0} : coeffs_.back(); }

std::uint64_t PolyFq::encode() const {
  const std::uint64_t q = field_->order();
  std::uint64_t code = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    code = code * q + coeffs_[i].index;
  return code;
}

PolyFq PolyFq::operator+(const PolyFq &rhs) const {
  check_same_field(rhs);
  PolyFq out(field_);
  out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = field_->add(coeff(i), rhs.coeff(i));
  out.trim();
  return out;
}

PolyFq PolyFq::operator-(const PolyFq &rhs) const {
  check_same_field(rhs);
  PolyFq out(field_);
  out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = field_->sub(coeff(i), rhs.coeff(i));
  out.trim();
  return out;
}

PolyFq PolyFq::operator-() const {
  PolyFq out(field_);
  out.coeffs_.reserve(coeffs_.size());
  for (auto c : coeffs_)
    out.coeffs_.push_back(field_->neg(c));
  return out;
}

PolyFq PolyFq::operator*(const PolyFq &rhs) const {
  check_same_field(rhs);
  PolyFq out(field_);
  if (is_zero() || rhs.is_zero())
    return out;
  out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, RingElem{0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].index == 0)
      continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out.coeffs_[i + j] = field_->add(out.coeffs_[i + j], field_->mul(coeffs_[i], rhs.coeffs_[j]));
  }
  out.trim();
  return out;
}

PolyFq PolyFq::scaled(RingElem c) const {
  PolyFq out(field_);
  for (auto x : coeffs_)
    out.coeffs_.push_back(field_->mul(x, c));
  out.trim();
  return out;
}

PolyFq PolyFq::pow(std::uint64_t e) const {
  PolyFq result = constant(field_, field_->one());
  PolyFq base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return result;
}

bool PolyFq::operator==(const PolyFq &rhs) const {
  if (!field_ || !rhs.field_)
    return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
  return field_->spec() == rhs.field_->spec() && coeffs_ == rhs.coeffs_;
}

std::string PolyFq::to_text(std::size_t n) const {
  if (!is_zero() && static_cast<std::size_t>(degree()) >= n)
    throw Error(Errc::InvalidArgument, "polynomial degree exceeds text width");
  const bool extension = field_->spec().s > 1;
  std::ostringstream os;
  for (std::size_t i = 0; i < n; ++i) {
    if (i)
      os << ',';
    if (!extension) {
      os << coeff(i).index;
      continue;
    }
    const auto ds = field_->digits(coeff(i));
    for (std::size_t j = ds.size(); j-- > 0;) {
      os << ds[j];
      if (j)
        os << '.';
    }
  }
  return os.str();
}

PolyFq PolyFq::parse(RingPtr field, std::string_view text) {
  std::vector<RingElem> coeffs;
  if (!text.empty()) {
    for (auto token : split(text, ',')) {
      const auto parts = split(token, '.');
      std::vector<std::uint32_t> ds(parts.size());
      for (std::size_t j = 0; j < parts.size(); ++j) {
        ds[parts.size() - 1 - j] = parse_uint(parts[j]);
        if (ds[parts.size() - 1 - j] >= field->characteristic())
          throw Error(Errc::InvalidArgument, "digit out of range in '" + std::string(token) + "'");
      }
      if (ds.size() > field->spec().s)
        throw Error(Errc::InvalidArgument, "too many digits in '" + std::string(token) + "'");
      coeffs.push_back(field->from_digits(ds));
    }
  }
  return PolyFq(std::move(field), std::move(coeffs));
}

std::string PolyFq::pretty() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const auto c = coeffs_[i].index;
    if (c == 0)
      continue;
    if (!first)
      os << '+';
    first = false;
    if (c != 1 || i == 0)
      os << c;
    if (i >= 1)
      os << 'T';
    if (i >= 2)
      os << '^' << i;
  }
  return os.str();
}

PolyFq poly_arith(const PolyFq &a, const PolyFq &b, ArithOp op) {
  switch (op) {
  case ArithOp::Add:
    return a + b;
  case ArithOp::Sub:
    return a - b;
  case ArithOp::Mul:
    return a * b;
  }
  throw Error(Errc::InvalidArgument, "unknown arithmetic op");
}

PolyFq poly_eval_comp(const PolyFq &F, const PolyFq &u) {
  if (!(F.field()->spec() == u.field()->spec()))
    throw Error(Errc::ContextMismatch, "composition over different fields");
  PolyFq result(F.field());
  for (std::size_t i = F.coeffs().size(); i-- > 0;)
    result = result * u + PolyFq::constant(F.field(), F.coeffs()[i]);
  return result;
}

std::optional<PolyFq> kth_root(const PolyFq &u, std::uint32_t k) {
  if (k < 2)
    throw Error(Errc::InvalidArgument, "k must be at least 2");
  const RingPtr &F = u.field();
  if (u.is_zero())
    return u;
  const std::uint32_t p = F->characteristic();
  const std::uint64_t q = F->order();

  std::uint32_t k0 = k;
  std::uint64_t pe = 1;
  while (k0 % p == 0) {
    k0 /= p;
    pe *= p;
  }

  // p^e-th root: exponents must all be multiples of p^e; coefficient roots
  // come from inverting Frobenius, c^(1/p) = c^(q/p).
  PolyFq w = u;
  if (pe > 1) {
    std::vector<RingElem> coeffs((u.coeffs().size() - 1) / pe + 1);
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
      const RingElem c = u.coeffs()[i];
      if (c.index == 0)
        continue;
      if (i % pe != 0)
        return std::nullopt;
      RingElem r = c;
      for (std::uint64_t t = 1; t < pe; t *= p)
        r = F->pow(r, q / p);
      coeffs[i / pe] = r;
    }
    w = PolyFq(F, std::move(coeffs));
  }
  if (k0 == 1)
    return w;

  const int N = w.degree();
  if (N % static_cast<int>(k0) != 0)
    return std::nullopt;
  const std::size_t m = static_cast<std::size_t>(N) / k0;
  auto lead = field_root(*F, w.leading(), k0);
  if (!lead)
    return std::nullopt;

  std::vector<RingElem> b(m + 1, RingElem{0});
  b[m] = *lead;
  const RingElem pivot = F->mul(F->from_int(k0), F->pow(*lead, k0 - 1));
  const RingElem pivot_inv = F->inv(pivot);
  for (std::size_t j = m; j-- > 0;) {
    const std::size_t t = m * (k0 - 1) + j;
    const PolyFq partial = PolyFq(F, b).pow(k0);
    const RingElem residual = F->sub(w.coeff(t), partial.coeff(t));
    b[j] = F->mul(residual, pivot_inv);
  }
  PolyFq root(F, std::move(b));
  if (!(root.pow(k0) == w))
    return std::nullopt;
  return root;
}

PolySpace::PolySpace(RingPtr field, std::size_t n) : field_(std::move(field)), n_(n) {
  const std::uint64_t q = field_->order();
  size_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size_ *= q;
    if (size_ > kMaxEnumeration)
      throw Error(Errc::EnumerationTooLarge,
                  "q^n exceeds 10^7 for q=" + std::to_string(q) + ", n=" + std::to_string(n));
  }
}

PolySpace enumerate_P(RingPtr field, std::size_t n) { return PolySpace(std::move(field), n); }

} // namespace paley
