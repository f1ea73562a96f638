#include "paley/cli.hpp"

#include "paley/bounds.hpp"
#include "paley/error.hpp"
#include "paley/graphs.hpp"
#include "paley/indep.hpp"
#include "paley/numtheory.hpp"
#include "paley/sarkozy.hpp"
#include "paley/theta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace paley {

double round12(double x) {
  if (!std::isfinite(x))
    return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string format = "json";
  int time_budget = 300;
};

SolverOptions solver_options(const Common &c) {
  SolverOptions o;
  o.time_budget = std::chrono::seconds(c.time_budget);
  return o;
}

Json num(double x) { return round12(x); }

template <typename T> Json opt_num(const std::optional<T> &x) {
  if (!x)
    return nullptr;
  if constexpr (std::is_floating_point_v<T>)
    return num(*x);
  else
    return *x;
}

Json header(std::string_view command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// Output formats. Text and CSV flatten nested objects into dotted keys.

std::string scalar_text(const Json &v) {
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_null())
    return "";
  return v.dump();
}

void flatten(const Json &j, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    return;
  }
  if (j.is_array()) {
    std::string s = j.dump();
    if (s.size() > 200)
      s = "[" + std::to_string(j.size()) + " entries]";
    rows.emplace_back(prefix, s);
    return;
  }
  rows.emplace_back(prefix, scalar_text(j));
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(const Json &doc, const std::string &format, std::ostream &out) {
  if (format == "json") {
    out << doc.dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  if (format == "csv") {
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << (i ? "," : "") << csv_field(rows[i].first);
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << (i ? "," : "") << csv_field(rows[i].second);
    out << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto &[k, v] : rows)
    width = std::max(width, k.size());
  for (const auto &[k, v] : rows)
    out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

// Appends the members of `src` to the object `doc`.
void merge(Json &doc, const Json &src) {
  for (auto it = src.begin(); it != src.end(); ++it)
    doc[it.key()] = it.value();
}

Json elems(const std::vector<RingElem> &xs) {
  Json a = Json::array();
  for (auto x : xs)
    a.push_back(x.index);
  return a;
}

Json tuples_json(const std::vector<std::vector<Vertex>> &ts) {
  Json a = Json::array();
  for (const auto &t : ts)
    a.push_back(t);
  return a;
}

// ---------------------------------------------------------------------------
// graph

struct GraphArgs {
  std::string ring;
  std::uint32_t k = 2;
  bool complement = false;
  std::size_t power = 1;
  std::string dimacs;
};

Json cmd_graph(const GraphArgs &a) {
  const auto ring = make_ring(RingSpec::parse(a.ring));
  auto g = build_paley(ring, a.k);
  if (a.complement)
    g = complement_cayley(g);
  if (a.power == 0)
    throw Error(Errc::InvalidArgument, "--power must be at least 1");

  Json doc = header("graph");
  doc["ring"] = ring->spec().to_string();
  doc["k"] = a.k;
  doc["complement"] = a.complement;
  doc["power"] = a.power;
  doc["undirected"] = g.symmetric();
  doc["factor_order"] = g.order();
  doc["factor_degree"] = g.degree();
  doc["connection"] = elems(g.connection());

  std::optional<GenericGraph> dense;
  std::uint64_t order = g.order(), degree = g.degree();
  if (a.power == 1) {
    dense = g.to_generic();
  } else {
    const ProductGraph product = strong_power(g.to_generic(), a.power);
    order = product.order();
    degree = ipow(g.degree() + 1, static_cast<std::uint32_t>(a.power)) - 1;
    if (product.order() <= kMaxDenseVertices || !a.dimacs.empty())
      dense = product.to_generic();
  }
  doc["order"] = order;
  doc["degree"] = degree;
  if (dense) {
    const auto arcs = dense->arc_count();
    doc["arcs"] = arcs;
    doc["edges"] = g.symmetric() ? Json(arcs / 2) : Json(nullptr);
    doc["fingerprint"] = hex(dense->fingerprint());
  }
  if (!a.dimacs.empty()) {
    if (!g.symmetric())
      throw Error(Errc::DirectedUnsupported, "DIMACS export needs an undirected graph");
    export_dimacs(*dense, a.dimacs);
    doc["dimacs"] = a.dimacs;
  }
  return doc;
}

// ---------------------------------------------------------------------------
// alpha

struct AlphaArgs {
  std::string ring;
  std::uint32_t k = 2;
  std::size_t power = 1;
};

Json cmd_alpha(const AlphaArgs &a, const SolverOptions &opts) {
  const auto ring = make_ring(RingSpec::parse(a.ring));
  const auto res = alpha_product(ring, a.k, a.power, opts);

  bool verified;
  const auto factor = build_paley(ring, a.k).to_generic();
  if (a.power == 1)
    verified = verify_independent(factor, res.certificate.vertices);
  else
    verified = verify_independent(strong_power(factor, a.power), res.certificate.vertices);

  Json doc = header("alpha");
  doc["ring"] = ring->spec().to_string();
  doc["k"] = a.k;
  doc["power"] = a.power;
  doc["order"] = ipow(ring->order(), static_cast<std::uint32_t>(a.power));
  doc["alpha"] = res.value;
  doc["exact"] = true;
  doc["verified"] = verified;
  doc["nodes"] = res.stats.nodes;
  if (a.power == 1)
    doc["certificate"] = res.certificate.vertices;
  else
    doc["certificate"] = tuples_json(res.certificate.tuples);
  return doc;
}

// ---------------------------------------------------------------------------
// theta

struct ThetaArgs {
  std::string ring;
  std::uint32_t k = 2;
  bool complement = false;
};

Json theta_json(const ThetaReport &r) {
  Json j;
  j["value"] = num(r.value);
  j["method"] = theta_method_name(r.method);
  j["lambda_max"] = num(r.lambda_max);
  j["lambda_min"] = num(r.lambda_min);
  return j;
}

Json cmd_theta(const ThetaArgs &a) {
  const auto ring = make_ring(RingSpec::parse(a.ring));
  ThetaReport rep;
  if (ring->is_field() || is_prime(ring->order())) {
    const auto g = build_paley(ring, a.k);
    rep = lovasz_theta(a.complement ? complement_cayley(g) : g);
  } else {
    if (a.complement)
      throw Error(Errc::NotApplicable, "complement theta needs a field or prime modulus");
    rep = theta_zmod(ring->order(), a.k);
  }
  Json doc = header("theta");
  doc["ring"] = ring->spec().to_string();
  doc["k"] = a.k;
  doc["complement"] = a.complement;
  merge(doc, theta_json(rep));
  if (!rep.factors.empty()) {
    Json fs = Json::array();
    for (std::size_t i = 0; i < rep.factors.size(); ++i) {
      Json f = theta_json(rep.factors[i]);
      f["prime"] = rep.factor_primes[i];
      fs.push_back(std::move(f));
    }
    doc["factors"] = std::move(fs);
  }
  return doc;
}

// ---------------------------------------------------------------------------
// construct / verify

SarkozyVariant parse_variant(const std::string &s) {
  if (s == "general")
    return SarkozyVariant::General;
  if (s == "power")
    return SarkozyVariant::Power;
  throw Error(Errc::InvalidArgument, "variant must be general or power");
}

bool certificate_independent(const SarkozySet &A) {
  const auto factor = build_paley(A.field(), A.params().k).to_generic();
  if (A.params().variant == SarkozyVariant::General) {
    std::vector<Vertex> s;
    for (auto x : A.S())
      s.push_back(x.index);
    return verify_independent(factor, s);
  }
  const auto square = strong_power(factor, 2);
  std::vector<Vertex> ids;
  for (auto [x, y] : A.U()) {
    const Vertex t[2] = {x.index, y.index};
    ids.push_back(square.id(t));
  }
  return verify_independent(square, ids);
}

Json verify_json(const VerifyReport &r, std::size_t n) {
  Json j;
  j["verdict"] = r.ok ? "pass" : "fail";
  j["shift_inputs"] = r.inputs;
  j["shifts"] = r.shifts;
  j["members"] = r.members;
  j["membership_tests"] = r.membership_tests;
  if (r.violation) {
    j["violation"] = {{"member", r.violation->first.to_text(n)},
                      {"shift", r.violation->second.to_text(n)}};
  }
  return j;
}

Json set_json(const SarkozySet &A) {
  const auto &p = A.params();
  Json doc;
  doc["params"] = {{"q", p.q},
                   {"k", p.k},
                   {"n", p.n},
                   {"variant", p.variant == SarkozyVariant::General ? "general" : "power"},
                   {"F", p.F.to_text(static_cast<std::size_t>(p.F.degree()) + 1)}};
  doc["scale"] = A.scale().index;
  if (p.variant == SarkozyVariant::General) {
    doc["certificate"] = {{"S", elems(A.S())}};
  } else {
    Json u = Json::array();
    for (auto [x, y] : A.U())
      u.push_back({x.index, y.index});
    doc["certificate"] = {{"U", std::move(u)}};
  }
  doc["certificate_independent"] = certificate_independent(A);
  const auto t = A.size_terms();
  doc["size"] = opt_num(t.exact());
  doc["size_terms"] = {{"base", t.base}, {"base_exp", t.base_exp}, {"q", t.q}, {"free_exp", t.free_exp}};
  doc["log_size"] = num(t.log_value());
  return doc;
}

Json verification_block(const SarkozySet &A) {
  try {
    return verify_json(verify_no_F_difference(A), A.params().n);
  } catch (const Error &e) {
    if (!is_cap_violation(e.code()))
      throw;
    return {{"verdict", "skipped"}, {"reason", e.what()}};
  }
}

struct ConstructArgs {
  std::uint32_t q = 0, k = 0;
  std::size_t n = 0;
  std::string variant = "power";
  std::string F;
  std::string pairs = "solver";
  std::string out;
};

Json cmd_construct(const ConstructArgs &a, const SolverOptions &opts) {
  const auto variant = parse_variant(a.variant);
  std::optional<PolyFq> F;
  if (!a.F.empty())
    F = PolyFq::parse(make_ring(RingSpec::field_of_order(a.q)), a.F);
  const auto params = SarkozyParams::make(a.q, a.k, a.n, variant, F);
  std::optional<SarkozySet> A;
  if (variant == SarkozyVariant::General) {
    A.emplace(build_sarkozy_general(params, opts));
  } else {
    if (a.pairs != "solver" && a.pairs != "beta")
      throw Error(Errc::InvalidArgument, "--pairs must be solver or beta");
    A.emplace(build_sarkozy_power(params, a.pairs == "beta" ? PairSource::BetaPair : PairSource::Solver, opts));
  }
  Json doc = header("construct");
  merge(doc, set_json(*A));
  doc["verification"] = verification_block(*A);
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f)
      throw Error(Errc::Io, "cannot write " + a.out);
    f << doc.dump(2) << '\n';
    doc["written"] = a.out;
  }
  return doc;
}

Json cmd_verify(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw Error(Errc::Io, "cannot read " + path);
  Json in;
  try {
    in = Json::parse(f);
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  try {
    const auto &p = in.at("params");
    const auto q = p.at("q").get<std::uint32_t>();
    const auto k = p.at("k").get<std::uint32_t>();
    const auto n = p.at("n").get<std::size_t>();
    const auto field = make_ring(RingSpec::field_of_order(q));
    std::optional<PolyFq> F;
    if (p.contains("F"))
      F = PolyFq::parse(field, p.at("F").get<std::string>());
    const auto variant = parse_variant(p.value("variant", std::string("power")));
    const auto params = SarkozyParams::make(q, k, n, variant, F);

    Json doc = header("verify");
    doc["input"] = path;
    if (in.contains("members")) {
      // An explicit list of polynomials.
      std::vector<PolyFq> members;
      for (const auto &m : in.at("members"))
        members.push_back(PolyFq::parse(field, m.get<std::string>()));
      doc["params"] = p;
      merge(doc, verify_json(verify_no_F_difference(members, params.F, n), n));
      return doc;
    }

    const auto &cert = in.at("certificate");
    std::optional<SarkozySet> A;
    if (variant == SarkozyVariant::General) {
      std::vector<RingElem> S;
      for (const auto &x : cert.at("S"))
        S.push_back({x.get<std::uint32_t>()});
      A.emplace(SarkozySet::from_general(params, std::move(S)));
    } else {
      std::vector<PairElem> U;
      for (const auto &xy : cert.at("U"))
        U.emplace_back(RingElem{xy.at(0).get<std::uint32_t>()}, RingElem{xy.at(1).get<std::uint32_t>()});
      A.emplace(SarkozySet::from_power(params, std::move(U)));
    }
    merge(doc, set_json(*A));
    if (in.contains("size") && !in.at("size").is_null())
      doc["size_matches"] = in.at("size") == doc["size"];
    merge(doc, verification_block(*A));
    return doc;
  } catch (const nlohmann::json::exception &e) {
    throw Error(Errc::InvalidArgument, std::string("bad certificate file: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// bounds

double parse_fraction(const std::string &s) {
  const auto slash = s.find('/');
  std::size_t used = 0;
  try {
    if (slash == std::string::npos) {
      const double v = std::stod(s, &used);
      if (used == s.size())
        return v;
    } else {
      const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
      const double num_v = std::stod(a, &used);
      if (used == a.size()) {
        const double den = std::stod(b, &used);
        if (used == b.size() && den != 0.0)
          return num_v / den;
      }
    }
  } catch (const std::exception &) {
  }
  throw Error(Errc::InvalidArgument, "cannot parse '" + s + "' as a number or fraction");
}

struct BoundsArgs {
  std::uint32_t q = 0, k = 0;
  std::size_t n = 0;
  std::string gamma;
};

Json cmd_bounds(const BoundsArgs &a, const SolverOptions &opts) {
  std::optional<double> gamma;
  if (!a.gamma.empty())
    gamma = parse_fraction(a.gamma);
  const auto L = bounds_report(a.q, a.k, a.n, gamma, opts);
  Json doc = header("bounds");
  doc["q"] = L.q;
  doc["k"] = L.k;
  doc["n"] = L.n;
  doc["green_exponent"] = num(L.green_exponent);
  doc["green_rate"] = num(L.green_rate);
  doc["gamma"] = opt_num(L.gamma);
  doc["refined_rate"] = opt_num(L.refined_rate);
  doc["refined_t"] = opt_num(L.refined_t);
  doc["lower_thm1"] = opt_num(L.lower_thm1);
  doc["lower_improved"] = opt_num(L.lower_improved);
  doc["r_k1"] = opt_num(L.r_k1);
  doc["r_k2"] = opt_num(L.r_k2);
  doc["method_limit"] = num(L.method_limit);
  doc["greedy"] = opt_num(L.greedy);
  doc["ordering_ok"] = L.ordering_ok;
  doc["conjecture"] = "unproved: |A| <= q^{n(1-1/k^2)}, base " + Json(num(L.method_limit)).dump();
  return doc;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Generalized Paley graphs, independence numbers, theta bounds and difference-free sets"};
  app.name("paley");
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->capture_default_str();
  app.add_option("--time-budget", common.time_budget, "Solver budget in seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  GraphArgs graph;
  auto *g = app.add_subcommand("graph", "Build and summarize Paley_k(R)");
  g->add_option("--ring", graph.ring, "fq:<q> or zmod:<m>")->required();
  g->add_option("--k", graph.k, "Power")->required();
  g->add_flag("--complement", graph.complement);
  g->add_option("--power", graph.power, "Strong power");
  g->add_option("--dimacs", graph.dimacs, "Write DIMACS edge file");

  AlphaArgs alpha;
  auto *al = app.add_subcommand("alpha", "Exact independence number of a strong power");
  al->add_option("--ring", alpha.ring)->required();
  al->add_option("--k", alpha.k)->required();
  al->add_option("--power", alpha.power);

  ThetaArgs theta;
  auto *th = app.add_subcommand("theta", "Lovasz theta of Paley_k(R)");
  th->add_option("--ring", theta.ring)->required();
  th->add_option("--k", theta.k)->required();
  th->add_flag("--complement", theta.complement);

  ConstructArgs cons;
  auto *co = app.add_subcommand("construct", "Build a k-th-power-difference-free set in P_{q,n}");
  co->add_option("--q", cons.q)->required();
  co->add_option("--k", cons.k)->required();
  co->add_option("--n", cons.n)->required();
  co->add_option("--variant", cons.variant)->check(CLI::IsMember({"general", "power"}));
  co->add_option("--F", cons.F, "Coefficients c_0,...,c_k of F (default T^k)");
  co->add_option("--pairs", cons.pairs, "Source of U: solver or beta")->check(CLI::IsMember({"solver", "beta"}));
  co->add_option("--out", cons.out, "Also write the JSON document here");

  std::string verify_in;
  auto *ve = app.add_subcommand("verify", "Check a construct output for F(u) differences");
  ve->add_option("--in", verify_in)->required();

  BoundsArgs bounds;
  auto *bo = app.add_subcommand("bounds", "Bound ledger for (q, k, n)");
  bo->add_option("--q", bounds.q)->required();
  bo->add_option("--k", bounds.k)->required();
  bo->add_option("--n", bounds.n)->required();
  bo->add_option("--gamma", bounds.gamma, "Exponent for the refined rate, e.g. 4/9");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto opts = solver_options(common);
  try {
    Json doc;
    if (*g)
      doc = cmd_graph(graph);
    else if (*al)
      doc = cmd_alpha(alpha, opts);
    else if (*th)
      doc = cmd_theta(theta);
    else if (*co)
      doc = cmd_construct(cons, opts);
    else if (*ve)
      doc = cmd_verify(verify_in);
    else
      doc = cmd_bounds(bounds, opts);
    emit(doc, common.format, out);
    return kExitOk;
  } catch (const SolverTimeout &t) {
    Json doc = header(app.get_subcommands().front()->get_name());
    doc["status"] = "timeout";
    doc["time_budget"] = common.time_budget;
    doc["incumbent_size"] = t.incumbent().size();
    doc["incumbent"] = t.incumbent().vertices;
    doc["nodes"] = t.stats().nodes;
    emit(doc, common.format, out);
    err << t.what() << '\n';
    return kExitTimeout;
  } catch (const Error &e) {
    err << e.what() << '\n';
    return is_cap_violation(e.code()) ? kExitCap : kExitUsage;
  } catch (const std::exception &e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace paley
