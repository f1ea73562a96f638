#include "paley/indep.hpp"

#include "paley/numtheory.hpp"
#include "paley/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace paley {

namespace {

/// Largest strong power the capacity sandwich hands to the exact solver.
constexpr std::size_t kCapacitySolverCap = 400;

std::uint32_t check_field_k(const RingPtr &field, std::uint32_t k) {
  if (!field->is_field())
    throw Error(Errc::NotAField, field->spec().to_string() + " is not a field");
  if (k < 2)
    throw Error(Errc::InvalidArgument, "k must be at least 2");
  return std::gcd(k, field->order() - 1);
}

GenericGraph paley_factor(const RingPtr &ring, std::uint32_t k, bool complement_graph) {
  auto g = build_paley(ring, k);
  return complement_graph ? complement(g) : g.to_generic();
}

} // namespace

bool verify_independent(const GenericGraph &g, std::span<const Vertex> set) {
  for (auto v : set)
    if (v >= g.order())
      throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || g.adjacent(set[i], set[j]))
        return false;
  return true;
}

bool verify_independent(const ProductGraph &g, std::span<const Vertex> set) {
  for (auto v : set)
    if (v >= g.order())
      throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || g.has_edge(set[i], set[j]) || g.has_edge(set[j], set[i]))
        return false;
  return true;
}

AlphaResult alpha_product(RingPtr ring, std::uint32_t k, std::size_t n, const SolverOptions &opts) {
  if (n == 0)
    throw Error(Errc::InvalidArgument, "power must be at least 1");
  const auto base = build_paley(ring, k);
  const auto factor = base.to_generic();
  std::optional<ProductGraph> product;
  if (n > 1)
    product.emplace(strong_power(factor, n));
  const GenericGraph g = product ? product->to_generic() : factor;

  SolverOptions local = opts;
  // theta(G^n) = theta(G)^n bounds alpha; reaching its floor ends the search.
  if (!local.known_upper_bound && base.symmetric() && (ring->is_field() || is_prime(ring->order()))) {
    const double theta = lovasz_theta(base).value;
    local.known_upper_bound =
        static_cast<std::size_t>(std::floor(std::pow(theta, static_cast<double>(n)) + 1e-7));
  }
  if (local.seed.empty() && n == 2 && ring->is_field() && std::gcd(k, ring->order() - 1) > 1)
    local.seed = beta_pair_set(ring, k).vertices;

  AlphaResult out;
  out.certificate = max_independent_set(g, local, &out.stats);
  out.value = out.certificate.size();
  if (product)
    for (auto v : out.certificate.vertices)
      out.certificate.tuples.push_back(product->tuple(v));
  return out;
}

IndepSet diagonal_indep_set(RingPtr field, std::uint32_t k) {
  const std::uint32_t d = check_field_k(field, k);
  const auto comp = complement(build_paley(field, k));
  const ProductGraph power = strong_power(comp, k);
  const RingElem beta = d > 1 ? field->generator() : field->one();
  IndepSet out;
  for (std::uint32_t x = 0; x < field->order(); ++x) {
    std::vector<Vertex> t(k);
    RingElem coord{x};
    for (std::uint32_t j = 0; j < k; ++j) {
      t[j] = coord.index;
      coord = field->mul(coord, beta);
    }
    out.vertices.push_back(power.id(t));
    out.tuples.push_back(std::move(t));
  }
  if (power.order() <= kMaxDenseVertices)
    out.graph_fingerprint = power.to_generic().fingerprint();
  return out;
}

IndepSet beta_pair_set(RingPtr field, std::uint32_t k) {
  check_field_k(field, k);
  const RingElem beta = non_kth_power(*field, k);
  const ProductGraph power = strong_power(build_paley(field, k).to_generic(), 2);
  IndepSet out;
  for (std::uint32_t x = 0; x < field->order(); ++x) {
    std::vector<Vertex> t{x, field->mul({x}, beta).index};
    out.vertices.push_back(power.id(t));
    out.tuples.push_back(std::move(t));
  }
  if (power.order() <= kMaxDenseVertices)
    out.graph_fingerprint = power.to_generic().fingerprint();
  return out;
}

std::size_t clique_number(const GenericGraph &g, const SolverOptions &opts) {
  // A clique needs both orientations of every pair, which is exactly
  // independence in the complement once that is symmetrized.
  return max_independent_set(complement(g), opts).size();
}

double cohen_bound(std::uint64_t q, std::uint32_t k) {
  const auto pp = as_prime_power(q);
  if (!pp)
    throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
  const std::uint64_t d = std::gcd<std::uint64_t>(k, q - 1);
  if (d < 2)
    throw Error(Errc::InvalidArgument, "Cohen's bound needs gcd(k, q-1) >= 2");
  const double p = static_cast<double>(pp->prime);
  const double lq = std::log(static_cast<double>(q));
  const double raw = p / ((p - 1.0) * std::log(static_cast<double>(d))) *
                         (0.5 * lq - 2.0 * std::log(lq)) -
                     1.0;
  return std::max(raw, 1.0);
}

CapacityBounds capacity_bounds(RingPtr ring, std::uint32_t k, std::size_t max_n, bool complement_graph,
                               const SolverOptions &opts) {
  if (max_n == 0)
    throw Error(Errc::InvalidArgument, "max_n must be at least 1");
  const auto paley = build_paley(ring, k);
  if (!paley.symmetric())
    throw Error(Errc::DirectedUnsupported, "Shannon capacity needs an undirected graph");

  CapacityBounds out;
  if (ring->is_field() || is_prime(ring->order())) {
    out.upper = lovasz_theta(complement_graph ? complement_cayley(paley) : paley).value;
  } else {
    if (complement_graph)
      throw Error(Errc::NotApplicable, "complement theta over composite moduli is not supported");
    out.upper = theta_zmod(ring->order(), k).value;
  }

  const GenericGraph base = paley_factor(ring, k, complement_graph);
  const bool field_nontrivial = ring->is_field() && std::gcd(k, ring->order() - 1) > 1;
  std::vector<std::vector<std::vector<Vertex>>> best_tuples(max_n + 1);

  for (std::size_t n = 1; n <= max_n; ++n) {
    const ProductGraph power = strong_power(base, n);
    // Seeds: the product of the best sets for n-1 and 1, and the explicit
    // constructions where they live.
    std::vector<std::vector<Vertex>> seed;
    if (n > 1)
      for (const auto &a : best_tuples[n - 1])
        for (const auto &b : best_tuples[1]) {
          auto t = a;
          t.insert(t.end(), b.begin(), b.end());
          seed.push_back(std::move(t));
        }
    std::optional<IndepSet> construction;
    if (field_nontrivial && !complement_graph && n == 2)
      construction = beta_pair_set(ring, k);
    if (field_nontrivial && complement_graph && n == k)
      construction = diagonal_indep_set(ring, k);
    if (construction && construction->tuples.size() > seed.size())
      seed = construction->tuples;

    std::vector<Vertex> seed_ids;
    for (const auto &t : seed)
      seed_ids.push_back(power.id(t));

    std::vector<Vertex> found = seed_ids;
    bool exact = false;
    if (power.order() <= kCapacitySolverCap) {
      SolverOptions local = opts;
      local.seed = seed_ids;
      try {
        found = max_independent_set(power.to_generic(), local).vertices;
        exact = true;
      } catch (const SolverTimeout &t) {
        if (t.incumbent().size() > found.size())
          found = t.incumbent().vertices;
      }
    } else if (!verify_independent(power, seed_ids)) {
      throw Error(Errc::InvalidArgument, "seed set is not independent");
    }
    for (auto v : found)
      best_tuples[n].push_back(power.tuple(v));
    out.alphas.push_back(found.size());
    out.exact.push_back(exact);
    const double rate = std::pow(static_cast<double>(found.size()), 1.0 / static_cast<double>(n));
    if (rate > out.lower + 1e-12) {
      out.lower = rate;
      out.n_used = n;
    }
  }
  if (out.lower > out.upper + 1e-9)
    throw Error(Errc::InvalidArgument, "capacity lower bound exceeds theta");
  return out;
}

} // namespace paley
