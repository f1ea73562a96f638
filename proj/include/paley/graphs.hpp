#pragma once

// Generalized Paley graphs, complements, strong products and DIMACS I/O.
//
// Edges are ordered pairs: (x, y) is an edge of Paley_k(R) when x - y is a
// nonzero k-th power. Loops are never stored. Undirected graphs are the ones
// whose edge relation is symmetric.

#include "paley/bitset.hpp"
#include "paley/rings.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace paley {

inline constexpr std::size_t kMaxProductVertices = 100'000;
/// Largest graph stored as a dense bit matrix (32 MiB of adjacency).
inline constexpr std::size_t kMaxDenseVertices = 1u << 14;

using Vertex = std::uint32_t;

/// Dense directed adjacency matrix without loops.
class GenericGraph {
public:
  GenericGraph() = default;
  /// `vertex_transitive` is a structural promise made by the builders below;
  /// the solver uses it to fix one vertex of the optimum.
  explicit GenericGraph(std::size_t n, bool vertex_transitive = false);

  std::size_t order() const { return n_; }
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
  /// Either orientation present.
  bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v) || has_edge(v, u); }
  void add_edge(Vertex u, Vertex v);
  void add_undirected_edge(Vertex u, Vertex v);
  const Bitset &out_row(Vertex u) const { return rows_[u]; }
  std::size_t out_degree(Vertex u) const { return rows_[u].count(); }

  bool vertex_transitive() const { return vertex_transitive_; }
  bool is_symmetric() const;
  /// Edge whenever either orientation is present.
  GenericGraph symmetrized() const;
  /// Number of ordered pairs (u, v) with an edge.
  std::size_t arc_count() const;
  /// FNV-1a hash of the order and adjacency rows.
  std::uint64_t fingerprint() const;

  bool operator==(const GenericGraph &rhs) const { return n_ == rhs.n_ && rows_ == rhs.rows_; }

private:
  std::size_t n_ = 0;
  bool vertex_transitive_ = false;
  std::vector<Bitset> rows_;
};

/// Cayley graph on the additive group of a ring, described by its connection
/// set. For build_paley the connection is the set of nonzero k-th powers.
class CayleyGraph {
public:
  CayleyGraph(RingPtr ring, std::uint32_t k, std::vector<std::uint8_t> connection);

  const RingCtx &ring() const { return *ring_; }
  const RingPtr &ring_ptr() const { return ring_; }
  std::uint32_t k() const { return k_; }
  std::size_t order() const { return ring_->order(); }
  bool symmetric() const { return symmetric_; }
  bool in_connection(RingElem x) const { return connection_[x.index] != 0; }
  std::vector<RingElem> connection() const;
  std::size_t degree() const { return degree_; }
  bool has_edge(Vertex x, Vertex y) const {
    return connection_[ring_->sub({x}, {y}).index] != 0;
  }

  GenericGraph to_generic() const;

private:
  RingPtr ring_;
  std::uint32_t k_;
  std::vector<std::uint8_t> connection_;
  std::size_t degree_ = 0;
  bool symmetric_ = false;
};

/// Paley_k(R). For fields the symmetry flag is cross-checked against the
/// criterion that (q-1)/gcd(q-1,k) is even (or p = 2).
CayleyGraph build_paley(RingPtr ring, std::uint32_t k);

/// Cayley graph with the complementary connection set R \ (S u {0}).
CayleyGraph complement_cayley(const CayleyGraph &g);
GenericGraph complement(const GenericGraph &g);
GenericGraph complement(const CayleyGraph &g);

/// Strong product of directed factors with tuple vertices. Vertex ids are
/// mixed-radix with the first factor most significant.
class ProductGraph {
public:
  /// Errors: ProductTooLarge when the vertex count exceeds 10^5.
  explicit ProductGraph(std::vector<GenericGraph> factors);

  const std::vector<GenericGraph> &factors() const { return factors_; }
  std::size_t order() const { return order_; }
  std::vector<Vertex> tuple(Vertex id) const;
  Vertex id(std::span<const Vertex> tuple) const;
  /// (u, v) is an edge iff u != v and each coordinate is equal or an edge.
  bool has_edge(Vertex u, Vertex v) const;
  bool vertex_transitive() const;

  /// Dense materialization. Errors: ProductTooLarge above kMaxDenseVertices.
  GenericGraph to_generic() const;

private:
  std::vector<GenericGraph> factors_;
  std::size_t order_ = 1;
};

ProductGraph strong_product(const GenericGraph &g, const GenericGraph &h);
/// Flattens: the factors of `g` followed by `h`.
ProductGraph strong_product(const ProductGraph &g, const GenericGraph &h);
ProductGraph strong_power(const GenericGraph &g, std::size_t n);
GenericGraph complement(const ProductGraph &g);

/// Checks that x -> (x mod m, x mod n) is an isomorphism from Paley_k(Z/mn)
/// onto Paley_k(Z/m) x Paley_k(Z/n), comparing every ordered pair.
/// Errors: NotCoprime, BadModulus.
bool crt_factor_check(std::uint32_t m, std::uint32_t n, std::uint32_t k);

/// DIMACS "p edge" format, 1-based, edges (u < v) in lexicographic order.
/// Errors: DirectedUnsupported.
void export_dimacs(const GenericGraph &g, std::ostream &os);
void export_dimacs(const GenericGraph &g, const std::string &path);
/// Errors: InvalidArgument on malformed input, Io.
GenericGraph read_dimacs(std::istream &is);

} // namespace paley
