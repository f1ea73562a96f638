// Maximum independent set as maximum clique in the complement of the
// symmetrized graph. Bit-parallel branch and bound in the style of BBMC:
// vertices are renumbered by a degeneracy order, candidate sets are bitsets,
// and a greedy sequential colouring of the candidates bounds each subtree.

#include "paley/indep.hpp"

#include <algorithm>

namespace paley {

namespace {

struct BudgetExhausted {};
struct BoundAttained {};

class CliqueSearch {
public:
  CliqueSearch(const GenericGraph &g, const SolverOptions &opts)
      : n_(g.order()), opts_(opts), start_(std::chrono::steady_clock::now()) {
    const GenericGraph sym = g.symmetrized();
    renumber(sym);
    levels_.resize(n_ + 2, Level{Bitset(n_), Bitset(n_), Bitset(n_), {}, {}});
  }

  IndepSet run(const GenericGraph &g, SolverStats *stats) {
    seed_incumbent(g);
    const std::size_t stop = opts_.known_upper_bound.value_or(n_ + 1);
    try {
      if (best_.size() < stop && n_ > 0) {
        Bitset &P = levels_[0].candidates;
        if (opts_.exploit_transitivity && g.vertex_transitive()) {
          const Vertex root = position_[0];
          current_.push_back(root);
          P = adj_[root];
          if (P.none())
            improve();
          else
            expand(0);
          current_.pop_back();
        } else {
          P.set_all();
          expand(0);
        }
      }
    } catch (const BudgetExhausted &) {
      auto result = finish(g);
      if (stats)
        *stats = stats_;
      throw SolverTimeout(std::move(result), stats_);
    } catch (const BoundAttained &) {
    }
    auto result = finish(g);
    if (stats)
      *stats = stats_;
    return result;
  }

private:
  struct Level {
    Bitset candidates;
    Bitset uncoloured;
    Bitset colour_class;
    std::vector<Vertex> verts;
    std::vector<std::uint32_t> colours;
  };

  // Degeneracy order of the clique graph: the vertex removed first (smallest
  // remaining degree, ties to the least index) is numbered last.
  void renumber(const GenericGraph &sym) {
    std::vector<std::size_t> degree(n_);
    for (Vertex v = 0; v < n_; ++v)
      degree[v] = n_ - 1 - sym.out_degree(v);
    std::vector<std::uint8_t> removed(n_, 0);
    order_.assign(n_, 0);
    for (std::size_t slot = n_; slot-- > 0;) {
      Vertex pick = 0;
      std::size_t best = SIZE_MAX;
      for (Vertex v = 0; v < n_; ++v)
        if (!removed[v] && degree[v] < best) {
          best = degree[v];
          pick = v;
        }
      removed[pick] = 1;
      order_[slot] = pick;
      for (Vertex u = 0; u < n_; ++u)
        if (!removed[u] && u != pick && !sym.has_edge(pick, u))
          --degree[u];
    }
    position_.assign(n_, 0);
    for (Vertex i = 0; i < n_; ++i)
      position_[order_[i]] = i;

    adj_.assign(n_, Bitset(n_));
    for (Vertex i = 0; i < n_; ++i)
      for (Vertex j = 0; j < n_; ++j)
        if (i != j && !sym.has_edge(order_[i], order_[j]))
          adj_[i].set(j);
  }

  void seed_incumbent(const GenericGraph &g) {
    // Greedy clique in the renumbered clique graph.
    std::vector<Vertex> greedy;
    Bitset allowed(n_);
    allowed.set_all();
    for (auto v = allowed.next(0); v < n_; v = allowed.next(v + 1)) {
      greedy.push_back(static_cast<Vertex>(v));
      allowed &= adj_[v];
    }
    best_ = greedy;
    if (!opts_.seed.empty() && verify_independent(g, opts_.seed) && opts_.seed.size() > best_.size()) {
      best_.clear();
      for (auto v : opts_.seed)
        best_.push_back(position_[v]);
    }
  }

  void improve() {
    if (current_.size() <= best_.size())
      return;
    best_ = current_;
    if (opts_.known_upper_bound && best_.size() >= *opts_.known_upper_bound)
      throw BoundAttained{};
  }

  void tick() {
    ++stats_.nodes;
    if ((stats_.nodes & 0x3ff) == 0 && elapsed() > opts_.time_budget.count())
      throw BudgetExhausted{};
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void expand(std::size_t depth) {
    tick();
    Level &L = levels_[depth];
    Bitset &P = L.candidates;

    // Greedy sequential colouring; only vertices whose colour can still beat
    // the incumbent are kept for branching.
    L.verts.clear();
    L.colours.clear();
    L.uncoloured = P;
    const long need = static_cast<long>(best_.size()) - static_cast<long>(current_.size()) + 1;
    std::uint32_t colour = 0;
    while (!L.uncoloured.none()) {
      ++colour;
      L.colour_class = L.uncoloured;
      for (auto v = L.colour_class.next(0); v < n_; v = L.colour_class.next(v + 1)) {
        L.uncoloured.reset(v);
        L.colour_class.subtract(adj_[v]);
        if (static_cast<long>(colour) >= need) {
          L.verts.push_back(static_cast<Vertex>(v));
          L.colours.push_back(colour);
        }
      }
    }

    for (std::size_t i = L.verts.size(); i-- > 0;) {
      if (current_.size() + L.colours[i] <= best_.size())
        return;
      const Vertex v = L.verts[i];
      current_.push_back(v);
      Bitset &next = levels_[depth + 1].candidates;
      next = P;
      next &= adj_[v];
      if (next.none())
        improve();
      else
        expand(depth + 1);
      current_.pop_back();
      P.reset(v);
    }
  }

  IndepSet finish(const GenericGraph &g) {
    stats_.seconds = elapsed();
    IndepSet out;
    for (auto v : best_)
      out.vertices.push_back(order_[v]);
    std::sort(out.vertices.begin(), out.vertices.end());
    out.graph_fingerprint = g.fingerprint();
    return out;
  }

  std::size_t n_;
  SolverOptions opts_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Vertex> order_;    // position -> original vertex
  std::vector<Vertex> position_; // original vertex -> position
  std::vector<Bitset> adj_;      // clique graph in positions
  std::vector<Level> levels_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
  SolverStats stats_;
};

} // namespace

IndepSet max_independent_set(const GenericGraph &g, const SolverOptions &opts, SolverStats *stats) {
  for (auto v : opts.seed)
    if (v >= g.order())
      throw Error(Errc::VertexOutOfRange, "seed vertex out of range");
  CliqueSearch search(g, opts);
  return search.run(g, stats);
}

} // namespace paley
