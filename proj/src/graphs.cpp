#include "paley/graphs.hpp"

#include "paley/error.hpp"

#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace paley {

// ---------------------------------------------------------------------------
// GenericGraph

GenericGraph::GenericGraph(std::size_t n, bool vertex_transitive)
    : n_(n), vertex_transitive_(vertex_transitive) {
  if (n > kMaxDenseVertices)
    throw Error(Errc::ProductTooLarge,
                "dense graph with " + std::to_string(n) + " vertices exceeds 2^14");
  rows_.assign(n, Bitset(n));
}

void GenericGraph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_)
    throw Error(Errc::VertexOutOfRange, "edge endpoint out of range");
  if (u == v)
    throw Error(Errc::InvalidArgument, "loops are not allowed");
  rows_[u].set(v);
}

void GenericGraph::add_undirected_edge(Vertex u, Vertex v) {
  add_edge(u, v);
  add_edge(v, u);
}

bool GenericGraph::is_symmetric() const {
  for (Vertex u = 0; u < n_; ++u)
    for (auto v = rows_[u].next(0); v < n_; v = rows_[u].next(v + 1))
      if (!rows_[v].test(u))
        return false;
  return true;
}

GenericGraph GenericGraph::symmetrized() const {
  GenericGraph out = *this;
  for (Vertex u = 0; u < n_; ++u)
    for (auto v = rows_[u].next(0); v < n_; v = rows_[u].next(v + 1))
      out.rows_[v].set(u);
  return out;
}

std::size_t GenericGraph::arc_count() const {
  std::size_t c = 0;
  for (const auto &r : rows_)
    c += r.count();
  return c;
}

std::uint64_t GenericGraph::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(n_);
  for (const auto &r : rows_)
    for (std::size_t w = 0; w < r.word_count(); ++w)
      mix(r.data()[w]);
  return h;
}

// ---------------------------------------------------------------------------
// CayleyGraph

CayleyGraph::CayleyGraph(RingPtr ring, std::uint32_t k, std::vector<std::uint8_t> connection)
    : ring_(std::move(ring)), k_(k), connection_(std::move(connection)) {
  if (connection_.size() != ring_->order())
    throw Error(Errc::InvalidArgument, "connection mask has wrong length");
  if (connection_[0])
    throw Error(Errc::InvalidArgument, "connection set must exclude 0");
  symmetric_ = true;
  for (std::uint32_t x = 0; x < connection_.size(); ++x) {
    if (!connection_[x])
      continue;
    ++degree_;
    if (!connection_[ring_->neg({x}).index])
      symmetric_ = false;
  }
}

std::vector<RingElem> CayleyGraph::connection() const {
  std::vector<RingElem> out;
  for (std::uint32_t x = 0; x < connection_.size(); ++x)
    if (connection_[x])
      out.push_back({x});
  return out;
}

GenericGraph CayleyGraph::to_generic() const {
  const auto n = static_cast<Vertex>(order());
  GenericGraph g(n, true);
  const auto conn = connection();
  for (Vertex x = 0; x < n; ++x)
    for (auto s : conn) {
      // (x, y) is an edge iff x - y = s, i.e. y = x - s.
      g.add_edge(x, ring_->sub({x}, s).index);
    }
  return g;
}

CayleyGraph build_paley(RingPtr ring, std::uint32_t k) {
  if (k < 2)
    throw Error(Errc::InvalidArgument, "k must be at least 2");
  std::vector<std::uint8_t> mask(ring->order(), 0);
  for (auto x : ring->kth_powers(k).elements())
    mask[x.index] = 1;
  mask[0] = 0;
  CayleyGraph g(ring, k, std::move(mask));
  if (ring->is_field()) {
    const std::uint32_t q1 = ring->order() - 1;
    const bool criterion = ring->characteristic() == 2 || (q1 / std::gcd(q1, k)) % 2 == 0;
    if (criterion != g.symmetric())
      throw Error(Errc::InvalidArgument, "symmetry flag disagrees with the (q-1)/gcd criterion");
  }
  return g;
}

CayleyGraph complement_cayley(const CayleyGraph &g) {
  std::vector<std::uint8_t> mask(g.order(), 0);
  for (std::uint32_t x = 1; x < g.order(); ++x)
    mask[x] = g.in_connection({x}) ? 0 : 1;
  return CayleyGraph(g.ring_ptr(), g.k(), std::move(mask));
}

GenericGraph complement(const GenericGraph &g) {
  GenericGraph out(g.order(), g.vertex_transitive());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v)
      if (u != v && !g.has_edge(u, v))
        out.add_edge(u, v);
  return out;
}

GenericGraph complement(const CayleyGraph &g) { return complement_cayley(g).to_generic(); }

// ---------------------------------------------------------------------------
// ProductGraph

ProductGraph::ProductGraph(std::vector<GenericGraph> factors) : factors_(std::move(factors)) {
  if (factors_.empty())
    throw Error(Errc::InvalidArgument, "product needs at least one factor");
  for (const auto &f : factors_) {
    order_ *= f.order();
    if (order_ > kMaxProductVertices)
      throw Error(Errc::ProductTooLarge, "strong product exceeds 10^5 vertices");
  }
}

std::vector<Vertex> ProductGraph::tuple(Vertex id) const {
  std::vector<Vertex> t(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto n = factors_[i].order();
    t[i] = static_cast<Vertex>(id % n);
    id /= static_cast<Vertex>(n);
  }
  return t;
}

Vertex ProductGraph::id(std::span<const Vertex> t) const {
  if (t.size() != factors_.size())
    throw Error(Errc::InvalidArgument, "tuple length does not match factor count");
  std::uint64_t id = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (t[i] >= factors_[i].order())
      throw Error(Errc::VertexOutOfRange, "tuple coordinate out of range");
    id = id * factors_[i].order() + t[i];
  }
  return static_cast<Vertex>(id);
}

bool ProductGraph::has_edge(Vertex u, Vertex v) const {
  if (u == v)
    return false;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto n = static_cast<Vertex>(factors_[i].order());
    const Vertex a = u % n, b = v % n;
    if (a != b && !factors_[i].has_edge(a, b))
      return false;
    u /= n;
    v /= n;
  }
  return true;
}

bool ProductGraph::vertex_transitive() const {
  for (const auto &f : factors_)
    if (!f.vertex_transitive())
      return false;
  return true;
}

GenericGraph ProductGraph::to_generic() const {
  if (order_ > kMaxDenseVertices)
    throw Error(Errc::ProductTooLarge, "product too large to materialize densely");
  GenericGraph g(order_, vertex_transitive());
  // Closed out-neighbourhoods per factor vertex.
  std::vector<std::vector<std::vector<Vertex>>> closed(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto &f = factors_[i];
    closed[i].resize(f.order());
    for (Vertex a = 0; a < f.order(); ++a) {
      closed[i][a].push_back(a);
      const auto &row = f.out_row(a);
      for (auto b = row.next(0); b < f.order(); b = row.next(b + 1))
        closed[i][a].push_back(static_cast<Vertex>(b));
    }
  }
  std::vector<std::size_t> pos(factors_.size());
  for (Vertex u = 0; u < order_; ++u) {
    const auto t = tuple(u);
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < factors_.size(); ++i)
        v = v * factors_[i].order() + closed[i][t[i]][pos[i]];
      if (v != u)
        g.add_edge(u, static_cast<Vertex>(v));
      std::size_t i = factors_.size();
      while (i-- > 0) {
        if (++pos[i] < closed[i][t[i]].size())
          break;
        pos[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1))
        break;
    }
  }
  return g;
}

ProductGraph strong_product(const GenericGraph &g, const GenericGraph &h) {
  return ProductGraph({g, h});
}

ProductGraph strong_product(const ProductGraph &g, const GenericGraph &h) {
  auto factors = g.factors();
  factors.push_back(h);
  return ProductGraph(std::move(factors));
}

ProductGraph strong_power(const GenericGraph &g, std::size_t n) {
  if (n == 0)
    throw Error(Errc::InvalidArgument, "power must be at least 1");
  return ProductGraph(std::vector<GenericGraph>(n, g));
}

GenericGraph complement(const ProductGraph &g) { return complement(g.to_generic()); }

bool crt_factor_check(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
  if (m < 2 || n < 2)
    throw Error(Errc::BadModulus, "factors must exceed 1");
  if (std::gcd(m, n) != 1)
    throw Error(Errc::NotCoprime, std::to_string(m) + " and " + std::to_string(n));
  const std::uint32_t mn = m * n;
  const auto whole = build_paley(make_ring(RingSpec::zmod(mn)), k).to_generic();
  const auto prod = strong_product(build_paley(make_ring(RingSpec::zmod(m)), k).to_generic(),
                                   build_paley(make_ring(RingSpec::zmod(n)), k).to_generic());

  // The CRT map x -> (x mod m, x mod n), as a product vertex id.
  std::vector<Vertex> image(mn);
  std::vector<std::uint8_t> hit(mn, 0);
  for (Vertex x = 0; x < mn; ++x) {
    const Vertex t[2] = {x % m, x % n};
    image[x] = prod.id(t);
    if (hit[image[x]]++)
      return false;
  }
  const auto dense = prod.to_generic();
  for (Vertex x = 0; x < mn; ++x)
    for (Vertex y = 0; y < mn; ++y)
      if (whole.has_edge(x, y) != dense.has_edge(image[x], image[y]))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// DIMACS

void export_dimacs(const GenericGraph &g, std::ostream &os) {
  if (!g.is_symmetric())
    throw Error(Errc::DirectedUnsupported, "DIMACS export needs an undirected graph");
  os << "p edge " << g.order() << ' ' << g.arc_count() / 2 << '\n';
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto &row = g.out_row(u);
    for (auto v = row.next(u + 1); v < g.order(); v = row.next(v + 1))
      os << "e " << u + 1 << ' ' << v + 1 << '\n';
  }
}

void export_dimacs(const GenericGraph &g, const std::string &path) {
  if (!g.is_symmetric())
    throw Error(Errc::DirectedUnsupported, "DIMACS export needs an undirected graph");
  std::ofstream os(path);
  if (!os)
    throw Error(Errc::Io, "cannot open " + path);
  export_dimacs(g, os);
  if (!os)
    throw Error(Errc::Io, "write failed for " + path);
}

GenericGraph read_dimacs(std::istream &is) {
  GenericGraph g;
  bool have_header = false;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c')
      continue;
    std::istringstream ls(line);
    char tag = 0;
    ls >> tag;
    if (tag == 'p') {
      std::string fmt;
      std::size_t n = 0, m = 0;
      if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col"))
        throw Error(Errc::InvalidArgument, "bad DIMACS header: " + line);
      g = GenericGraph(n);
      have_header = true;
    } else if (tag == 'e') {
      std::size_t u = 0, v = 0;
      if (!have_header || !(ls >> u >> v) || u == 0 || v == 0 || u > g.order() || v > g.order())
        throw Error(Errc::InvalidArgument, "bad DIMACS edge: " + line);
      if (u != v)
        g.add_undirected_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw Error(Errc::InvalidArgument, "unrecognised DIMACS line: " + line);
    }
  }
  if (!have_header)
    throw Error(Errc::InvalidArgument, "missing DIMACS header");
  return g;
}

} // namespace paley
