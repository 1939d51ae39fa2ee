#include "zagraph/harness.hpp"

#include "zagraph/error.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace zag {

using json = nlohmann::ordered_json;

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::zn: return "zn";
    case Family::gf: return "gf";
    case Family::products: return "products";
    case Family::local: return "local";
    case Family::matrix: return "matrix";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (auto f : {Family::zn, Family::gf, Family::products, Family::local, Family::matrix})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inapplicable: return "inapplicable";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

RingCatalogEntry make_entry(RingSpec spec, const RingLimits& limits) {
  auto ring = elaborate(spec, limits);
  RingCatalogEntry e{spec, render(spec), std::move(ring), std::nullopt, {}};
  try {
    RingProfile p{classify_elements(e.ring), ideal_lattice(e.ring), {}, {}, std::nullopt};
    p.spectrum = spectrum(e.ring, p.lattice);
    p.predicates = ring_predicates(e.ring, p.lattice, p.spectrum);
    p.crt = crt_decompose(e.ring, p.spectrum);
    e.profile = std::move(p);
  } catch (const Error& err) {
    e.profile_error = err.what();
  }
  return e;
}

namespace {

struct FieldSpec {
  std::uint64_t q;
  RingSpec spec;
};

// Zp for prime orders, GF(q) otherwise, ascending.
std::vector<FieldSpec> fields_up_to(std::size_t max_order) {
  std::vector<FieldSpec> out;
  for (std::uint64_t q = 2; q <= max_order; ++q) {
    const auto pp = prime_power(q);
    if (!pp) continue;
    out.push_back({q, pp->second == 1 ? RingSpec::zmod(q) : RingSpec::gf(q)});
  }
  return out;
}

RingSpec poly_quotient(std::uint64_t n, std::vector<std::uint64_t> coeffs) {
  return RingSpec::poly_quotient(n, Polynomial(n, std::move(coeffs)));
}

// Local rings that are not fields, with their orders.
std::vector<std::pair<std::size_t, RingSpec>> local_instances() {
  return {
      {4, poly_quotient(2, {0, 0, 1})},     // Z2[x]/(x^2)
      {4, RingSpec::zmod(4)},
      {8, RingSpec::zmod(8)},
      {8, poly_quotient(2, {0, 0, 0, 1})},  // Z2[x]/(x^3)
      {9, RingSpec::zmod(9)},
      {9, poly_quotient(3, {0, 0, 1})},     // Z3[x]/(x^2)
      {16, RingSpec::zmod(16)},
      {16, poly_quotient(4, {0, 0, 1})},    // Z4[x]/(x^2), not a principal ideal ring
      {16, poly_quotient(4, {2, 0, 1})},    // Z4[x]/(x^2+2)
      {25, RingSpec::zmod(25)},
      {27, RingSpec::zmod(27)},
      {32, RingSpec::zmod(32)},
      {49, RingSpec::zmod(49)},
      {64, RingSpec::zmod(64)},
  };
}

std::vector<std::pair<std::size_t, RingSpec>> catalog_specs(const CatalogLimits& limits) {
  std::vector<std::pair<std::size_t, RingSpec>> specs;
  const auto max = limits.max_order;
  auto enabled = [&](Family f) { return limits.families.contains(f); };
  if (max < 2) return specs;

  if (enabled(Family::zn))
    for (std::uint64_t n = 2; n <= max; ++n) specs.emplace_back(n, RingSpec::zmod(n));

  const auto fields = fields_up_to(max);
  if (enabled(Family::gf))
    for (const auto& f : fields)
      if (f.spec.kind == RingSpec::Kind::gf) specs.emplace_back(f.q, f.spec);

  if (enabled(Family::local))
    for (auto& [order, spec] : local_instances())
      if (order <= max) specs.emplace_back(order, spec);

  if (enabled(Family::products)) {
    for (std::size_t i = 0; i < fields.size(); ++i)
      for (std::size_t j = i; j < fields.size(); ++j) {
        const auto qij = fields[i].q * fields[j].q;
        if (qij > max) break;
        specs.emplace_back(qij, RingSpec::product({fields[i].spec, fields[j].spec}));
      }
    for (std::size_t i = 0; i < fields.size(); ++i)
      for (std::size_t j = i; j < fields.size(); ++j)
        for (std::size_t k = j; k < fields.size(); ++k) {
          const auto q = fields[i].q * fields[j].q * fields[k].q;
          if (q > max) break;
          specs.emplace_back(q, RingSpec::product({fields[i].spec, fields[j].spec, fields[k].spec}));
        }
    // Mixed products: a local non-field instance times a field or another local instance.
    const std::vector<std::pair<std::size_t, RingSpec>> locals = {
        {4, RingSpec::zmod(4)}, {4, poly_quotient(2, {0, 0, 1})}, {8, RingSpec::zmod(8)}, {9, RingSpec::zmod(9)}};
    for (const auto& [lo, ls] : locals)
      for (const auto& f : fields)
        if (lo * f.q <= max) specs.emplace_back(lo * f.q, RingSpec::product({ls, f.spec}));
    for (std::size_t i = 0; i < locals.size(); ++i)
      for (std::size_t j = i; j < locals.size(); ++j)
        if (locals[i].first * locals[j].first <= max)
          specs.emplace_back(locals[i].first * locals[j].first, RingSpec::product({locals[i].second, locals[j].second}));
  }

  if (enabled(Family::matrix)) {
    for (std::uint64_t n : {2, 3})
      if (n * n * n * n <= max) specs.emplace_back(n * n * n * n, RingSpec::matrix(2, RingSpec::zmod(n)));
  }
  return specs;
}

}  // namespace

std::vector<RingCatalogEntry> build_catalog(const CatalogLimits& limits, const RingLimits& ring_limits) {
  std::vector<RingCatalogEntry> out;
  std::unordered_set<std::string> seen;
  for (auto& [order, spec] : catalog_specs(limits)) {
    if (!seen.insert(render(spec)).second) continue;
    out.push_back(make_entry(std::move(spec), ring_limits));
  }
  return out;
}

namespace {

constexpr TheoremInfo kTheorems[] = {
    {"empty_graph_forward", "ZA(R) empty => R local and Ann(x) != 0 for every nonunit x", true, ""},
    {"empty_graph_converse", "R Bezout, local, Ann(x) != 0 for every nonunit x => ZA(R) empty", true, ""},
    {"chained_empty", "R zero-dimensional chained => ZA(R) empty", true,
     "every finite ring is zero-dimensional"},
    {"bipartite_classification",
     "R Bezout: ZA bipartite with min degree > 0 <=> ZA complete bipartite <=> R = F1 x F2", true, ""},
    {"star_max_ideals", "ZA(R) star => |Max(R)| <= 2", true, ""},
    {"star_classification",
     "R Bezout, not a field: ZA star <=> (R local, m = {0,x}, x^2 = 0) or R = Z2 x F", true, ""},
    {"complete_classification",
     "ZA complete <=> one nonzero nonunit, or integral domain, or R = Z2 x Z2", true, ""},
    {"regular_classification", "R Bezout: ZA k-regular (0 < k) <=> R = F_{k+1} x F_{k+1}", true, ""},
    {"regular_prime_power", "R Bezout, ZA k-regular (0 < k) => k+1 is a prime power", true, ""},
    {"diameter_product_of_fields",
     "R = F1 x ... x Fn, n >= 2: diam ZA = 1 (n = 2, |F1| = |F2| = 2), 2 (n = 2 otherwise), 3 (n >= 3)", true, ""},
    {"semiprimitive_connected", "Jac(R) = 0 and some maximal ideal principal => ZA connected, diam <= 4", true, ""},
    {"bezout_connected_jacobson",
     "R Bezout, ZA connected => Jac(R) = 0 or Jac(R) = {0,x} with x the only nonzero nonunit", true,
     "the branch 'some nonzero nonunit has Ann = 0' is impossible in a finite ring: every nonzero nonunit is a zero divisor"},
    {"connectivity_corollary",
     "R Bezout with a principal maximal ideal: ZA connected <=> Jac(R) = 0 or Jac(R) = {0,x}, x the only vertex", true,
     "same impossible branch as bezout_connected_jacobson"},
    {"matrix_girth", "girth ZA(M_k(R)) = 3 for k >= 2, witness matrices pairwise adjacent (left annihilators)", true, ""},
    {"prime_pair_adjacency", "P1, P2 prime, P1 n P2 = 0 => nonzero x in P1, y in P2 adjacent", true, ""},
    {"clique_bound", "|Min(R)| = n >= 2 (nonzero minimal primes) or R an n-fold product => clique number >= n", true, ""},
    {"idempotent_adjacency", "nontrivial idempotent e is adjacent to 1 - e", true, ""},
    {"complete_implies_coann_complete", "ZA complete => co-annihilating ideal graph complete", true, ""},
    {"chromatic_at_least_clique", "chromatic number >= clique number", true, ""},
    {"reduced_product_of_fields", "R finite reduced => R is a finite product of fields", true, ""},
    {"za_matches_definition", "ZA edge set equals a definition-level recomputation", true,
     "graph construction integrity; rings of order <= 256"},
    {"degree_finiteness", "Bezout, delta > 0: ZA finite <=> every vertex has finite degree", false,
     "vacuous for finite rings; documented only"},
    {"localization", "ZA(R) isomorphic to ZA(R_S) for S avoiding zero divisors", false,
     "out of scope: for a finite ring S consists of units and R_S = R"},
};

constexpr std::size_t kOracleMaxOrder = 256;

class Recorder {
 public:
  explicit Recorder(const RingAnalysis& a) : ring_(a.entry->provenance) {}

  void pass(std::string_view id, std::string detail = {}) { add(id, Verdict::pass, std::move(detail), nullptr); }
  void inapplicable(std::string_view id, std::string detail) { add(id, Verdict::inapplicable, std::move(detail), nullptr); }
  void fail(std::string_view id, std::string detail, json counterexample) {
    add(id, Verdict::fail, std::move(detail), std::move(counterexample));
  }
  void verdict(std::string_view id, bool ok, std::string detail, json counterexample) {
    ok ? pass(id, std::move(detail)) : fail(id, std::move(detail), std::move(counterexample));
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  void add(std::string_view id, Verdict v, std::string detail, json cx) {
    records_.push_back(CheckRecord{std::string(id), ring_, v, std::move(detail), std::move(cx), {}});
  }

  std::string ring_;
  std::vector<CheckRecord> records_;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

std::vector<std::size_t> field_orders(const RingProfile& p) {
  std::vector<std::size_t> q;
  if (p.crt)
    for (const auto& f : *p.crt) q.push_back(f.order());
  std::sort(q.begin(), q.end());
  return q;
}

json orders_json(const std::vector<std::size_t>& q) { return json(q); }

bool every_nonunit_annihilated(const FiniteRing& r, const ElementClasses& c, Element* witness) {
  const auto n = static_cast<Element>(r.order());
  for (Element x = 0; x < n; ++x) {
    if (c.units.test(x)) continue;
    if (annihilator(r, x, Side::left).count() == 1) {
      if (witness) *witness = x;
      return false;
    }
  }
  return true;
}

bool some_maximal_principal(const RingProfile& p) {
  for (const auto& m : p.spectrum.maximal_ideals)
    if (p.lattice.principal_generator[p.lattice.index_of(m)]) return true;
  return false;
}

// Jac(R) = {0, x} with x the unique nonzero nonunit.
bool jacobson_is_single_vertex(const RingAnalysis& a) {
  const auto& p = *a.entry->profile;
  if (p.spectrum.jacobson_radical.size() != 2 || a.za.vertex_count() != 1) return false;
  const auto x = p.spectrum.jacobson_radical.members.next(1);
  return a.za.sources().front() == x;
}

std::optional<std::size_t> vertex_of(const SimpleGraph& g, Element x) {
  const auto& s = g.sources();
  auto it = std::find(s.begin(), s.end(), x);
  if (it == s.end()) return std::nullopt;
  return static_cast<std::size_t>(it - s.begin());
}

json pair_json(const RingAnalysis& a, Element x, Element y) {
  const auto& r = a.entry->ring;
  return json{{"x", r.element_label(x)}, {"y", r.element_label(y)}, {"oracle_adjacent", oracle_adjacent(r, x, y)}};
}

}  // namespace

std::span<const TheoremInfo> theorem_table() { return kTheorems; }

bool oracle_adjacent(const FiniteRing& r, Element x, Element y, Side side) {
  const auto n = static_cast<Element>(r.order());
  auto kills = [&](Element m, Element v) {
    switch (side) {
      case Side::left: return r.mul(m, v) == 0;
      case Side::right: return r.mul(v, m) == 0;
      case Side::two_sided: return r.mul(m, v) == 0 && r.mul(v, m) == 0;
    }
    return false;
  };
  for (Element m = 1; m < n; ++m)
    if (kills(m, x) && kills(m, y)) return false;
  return true;
}

RingAnalysis analyze(const RingCatalogEntry& entry, const InvariantOptions& opts) {
  RingAnalysis a;
  a.entry = &entry;
  a.za = za_graph(entry.ring, Side::left);
  a.za_invariants = compute_invariants(a.za, opts);
  if (entry.profile && entry.ring.commutative()) a.coann = coann_ideal_graph(entry.ring, entry.profile->lattice);
  return a;
}

std::vector<CheckRecord> check_classifications(const RingAnalysis& a) {
  Recorder rec(a);
  const auto& r = a.entry->ring;
  const auto& inv = a.za_invariants;
  if (!a.entry->profile || !r.commutative()) {
    const std::string why =
        !r.commutative() ? "noncommutative ring" : "ring profile unavailable: " + a.entry->profile_error;
    for (auto id : {"empty_graph_forward", "empty_graph_converse", "chained_empty", "bipartite_classification",
                    "star_max_ideals", "star_classification", "complete_classification", "regular_classification",
                    "regular_prime_power"})
      rec.inapplicable(id, why);
    return rec.take();
  }
  const auto& p = *a.entry->profile;
  const auto& pred = p.predicates;
  const auto orders = field_orders(p);

  const bool edgeless = inv.edge_count == 0;
  Element no_ann = 0;
  const bool all_annihilated = every_nonunit_annihilated(r, p.classes, &no_ann);

  // Empty-graph theorem.
  if (!edgeless) {
    rec.pass("empty_graph_forward", "antecedent false: ZA has edges");
  } else {
    json cx{{"local", pred.local}, {"maximal_ideals", p.spectrum.maximal_ideals.size()}};
    if (!all_annihilated) cx["unannihilated_nonunit"] = r.element_label(no_ann);
    rec.verdict("empty_graph_forward", pred.local && all_annihilated, "ZA empty; local and every nonunit annihilated",
                std::move(cx));
  }
  if (!pred.bezout) {
    rec.inapplicable("empty_graph_converse", "not Bezout");
  } else if (!(pred.local && all_annihilated)) {
    rec.pass("empty_graph_converse", "antecedent false: not local or some nonunit has zero annihilator");
  } else {
    json cx = nullptr;
    if (!edgeless) {
      const auto [u, v] = a.za.edges().front();
      cx = pair_json(a, static_cast<Element>(a.za.sources()[u]), static_cast<Element>(a.za.sources()[v]));
    }
    rec.verdict("empty_graph_converse", edgeless, "local Bezout ring; ZA must be empty", std::move(cx));
  }

  if (!pred.chained) {
    rec.inapplicable("chained_empty", "ideals not totally ordered");
  } else {
    json cx = nullptr;
    if (!edgeless) {
      const auto [u, v] = a.za.edges().front();
      cx = pair_json(a, static_cast<Element>(a.za.sources()[u]), static_cast<Element>(a.za.sources()[v]));
    }
    rec.verdict("chained_empty", edgeless, "chained ring; ZA must be empty", std::move(cx));
  }

  // Bipartite theorem: three conditions must agree.
  if (!pred.bezout) {
    rec.inapplicable("bipartite_classification", "not Bezout");
  } else {
    const bool c1 = inv.shape.bipartite && inv.degrees.min_degree.value_or(0) > 0;
    const bool c2 = inv.shape.complete_bipartite;
    const bool c3 = orders.size() == 2;
    rec.verdict("bipartite_classification", c1 == c2 && c2 == c3,
                "bipartite with min degree > 0: " + yes(c1) + ", complete bipartite: " + yes(c2) +
                    ", product of two fields: " + yes(c3),
                json{{"bipartite_min_degree_positive", c1}, {"complete_bipartite", c2}, {"two_fields", c3},
                     {"field_orders", orders_json(orders)}});
  }

  // Star lemma and classification.
  if (!inv.shape.star) {
    rec.pass("star_max_ideals", "antecedent false: ZA not a star");
  } else {
    rec.verdict("star_max_ideals", p.spectrum.maximal_ideals.size() <= 2, "ZA star; at most two maximal ideals",
                json{{"maximal_ideals", p.spectrum.maximal_ideals.size()}});
  }
  if (!pred.bezout || pred.field) {
    rec.inapplicable("star_classification", pred.field ? "field" : "not Bezout");
  } else {
    bool local_case = false;
    if (pred.local) {
      const auto& m = p.spectrum.maximal_ideals.front();
      if (m.size() == 2) {
        const auto x = static_cast<Element>(m.members.next(1));
        local_case = r.mul(x, x) == 0;
      }
    }
    const bool product_case = orders.size() == 2 && orders.front() == 2;
    const bool star = inv.shape.star;
    rec.verdict("star_classification", star == (local_case || product_case),
                "star: " + yes(star) + ", local with m = {0,x}, x^2 = 0: " + yes(local_case) +
                    ", Z2 x field: " + yes(product_case),
                json{{"star", star}, {"local_case", local_case}, {"product_case", product_case},
                     {"field_orders", orders_json(orders)}});
  }

  // Complete-graph theorem.
  {
    const bool complete = inv.shape.complete;
    const bool one_nonunit = p.classes.nonzero_nonunits.count() == 1;
    const bool domain = pred.integral_domain;
    const bool z2z2 = orders == std::vector<std::size_t>{2, 2};
    rec.verdict("complete_classification", complete == (one_nonunit || domain || z2z2),
                "complete: " + yes(complete) + ", one nonzero nonunit: " + yes(one_nonunit) +
                    ", integral domain: " + yes(domain) + ", Z2 x Z2: " + yes(z2z2),
                json{{"complete", complete}, {"one_nonzero_nonunit", one_nonunit}, {"integral_domain", domain},
                     {"z2_x_z2", z2z2}, {"vertex_count", inv.vertex_count}, {"edge_count", inv.edge_count}});
  }

  // Regular-graph theorem and corollary.
  const auto k = inv.degrees.regular_k;
  const bool regular = k && *k > 0;
  if (!pred.bezout) {
    rec.inapplicable("regular_classification", "not Bezout");
    rec.inapplicable("regular_prime_power", "not Bezout");
  } else {
    const bool equal_pair = orders.size() == 2 && orders[0] == orders[1];
    const bool ok = regular ? (equal_pair && orders[0] == *k + 1) : !equal_pair;
    json cx{{"regular_k", k ? json(*k) : json(nullptr)}, {"field_orders", orders_json(orders)}};
    rec.verdict("regular_classification", ok,
                "k-regular (k > 0): " + (regular ? std::to_string(*k) : std::string("no")) +
                    ", product of two equal fields: " + yes(equal_pair),
                cx);
    if (!regular) {
      rec.pass("regular_prime_power", "antecedent false: ZA not k-regular with k > 0");
    } else {
      rec.verdict("regular_prime_power", prime_power(*k + 1).has_value(),
                  "k + 1 = " + std::to_string(*k + 1) + " must be a prime power", json{{"k_plus_1", *k + 1}});
    }
  }
  return rec.take();
}

namespace {

// The witness triple for M_k(R): pairwise adjacent matrices.
std::vector<Element> matrix_witnesses(const FiniteRing& base, unsigned k) {
  const auto q = base.order();
  const Element one = base.one();
  auto mat = [&](auto fill) {
    std::vector<Element> e(std::size_t{k} * k, 0);
    fill(e);
    return matrix_element(e, q);
  };
  if (k == 2) {
    return {mat([&](auto& e) { e[0] = one; }),                 // [[1,0],[0,0]]
            mat([&](auto& e) { e[2] = one; }),                 // [[0,0],[1,0]]
            mat([&](auto& e) { e[1] = one, e[3] = one; })};    // [[0,1],[0,1]]
  }
  auto diag = [&](std::size_t zero_from, std::size_t zero_to, std::size_t zero_at) {
    return mat([&](auto& e) {
      for (std::size_t i = 0; i < k; ++i)
        if (!(i >= zero_from && i < zero_to) && i != zero_at) e[i * k + i] = one;
    });
  };
  return {diag(2, k, k),    // diag(1,1,0,...,0)
          diag(0, 0, 1),    // diag(1,0,1,...,1)
          diag(0, 0, 0)};   // diag(0,1,1,...,1)
}

}  // namespace

std::vector<CheckRecord> check_metrics(const RingAnalysis& a) {
  Recorder rec(a);
  const auto& r = a.entry->ring;
  const auto& inv = a.za_invariants;
  const auto& conn = inv.connectivity;

  // Girth of matrix rings does not need the ideal profile.
  const auto& spec = a.entry->spec;
  if (spec.kind != RingSpec::Kind::matrix || spec.n < 2) {
    rec.inapplicable("matrix_girth", "not a matrix ring M_k with k >= 2");
  } else {
    const auto base = elaborate(spec.children.front());
    const auto w = matrix_witnesses(base, static_cast<unsigned>(spec.n));
    bool adjacent = true;
    json cx = json::object();
    for (std::size_t i = 0; i < w.size() && adjacent; ++i)
      for (std::size_t j = i + 1; j < w.size() && adjacent; ++j) {
        const auto u = vertex_of(a.za, w[i]);
        const auto v = vertex_of(a.za, w[j]);
        if (!u || !v || !a.za.adjacent(*u, *v)) {
          adjacent = false;
          cx["witness_pair"] = pair_json(a, w[i], w[j]);
        }
      }
    cx["girth"] = inv.girth ? json(*inv.girth) : json("inf");
    rec.verdict("matrix_girth", adjacent && inv.girth == 3u,
                "girth " + (inv.girth ? std::to_string(*inv.girth) : std::string("inf")) +
                    ", witnesses pairwise adjacent: " + yes(adjacent),
                std::move(cx));
  }

  if (!a.entry->profile || !r.commutative()) {
    const std::string why = !a.entry->profile ? "ring profile unavailable" : "noncommutative ring";
    for (auto id : {"diameter_product_of_fields", "semiprimitive_connected", "bezout_connected_jacobson",
                    "connectivity_corollary"})
      rec.inapplicable(id, why);
    return rec.take();
  }
  const auto& p = *a.entry->profile;
  const auto& pred = p.predicates;
  const auto orders = field_orders(p);
  const json diam = conn.diameter ? json(*conn.diameter) : json("inf");

  if (orders.size() < 2) {
    rec.inapplicable("diameter_product_of_fields", "not a product of at least two fields");
  } else {
    const std::size_t expected = orders.size() >= 3 ? 3 : (orders[0] == 2 && orders[1] == 2 ? 1 : 2);
    rec.verdict("diameter_product_of_fields", conn.connected && conn.diameter == expected,
                "expected diameter " + std::to_string(expected),
                json{{"field_orders", orders_json(orders)}, {"expected", expected}, {"diameter", diam}});
  }

  const bool principal_max = some_maximal_principal(p);
  if (!pred.semiprimitive || !principal_max) {
    rec.inapplicable("semiprimitive_connected", !pred.semiprimitive ? "Jac(R) != 0" : "no principal maximal ideal");
  } else {
    rec.verdict("semiprimitive_connected", conn.connected && conn.diameter.value_or(5) <= 4,
                "connected with diameter <= 4", json{{"connected", conn.connected}, {"diameter", diam}});
  }

  const bool jac_zero = pred.semiprimitive;
  const bool jac_single = jacobson_is_single_vertex(a);
  const json jac_cx{{"connected", conn.connected}, {"jacobson_size", p.spectrum.jacobson_radical.size()},
                    {"vertex_count", inv.vertex_count}};
  if (!pred.bezout) {
    rec.inapplicable("bezout_connected_jacobson", "not Bezout");
  } else if (!conn.connected) {
    rec.pass("bezout_connected_jacobson", "antecedent false: ZA disconnected");
  } else {
    rec.verdict("bezout_connected_jacobson", jac_zero || jac_single,
                "Jac(R) = 0: " + yes(jac_zero) + ", Jac(R) = {0,x} with x the only vertex: " + yes(jac_single), jac_cx);
  }
  if (!pred.bezout || !principal_max) {
    rec.inapplicable("connectivity_corollary", !pred.bezout ? "not Bezout" : "no principal maximal ideal");
  } else {
    rec.verdict("connectivity_corollary", conn.connected == (jac_zero || jac_single),
                "connected: " + yes(conn.connected) + ", Jac(R) = 0: " + yes(jac_zero) +
                    ", Jac(R) = {0,x} single vertex: " + yes(jac_single),
                jac_cx);
  }
  return rec.take();
}

std::vector<CheckRecord> check_structure_lemmas(const RingAnalysis& a) {
  Recorder rec(a);
  const auto& r = a.entry->ring;
  const auto& g = a.za;
  const auto& inv = a.za_invariants;
  const bool profiled = a.entry->profile.has_value();
  const bool commutative = r.commutative();

  // Lemma on prime pairs meeting in zero.
  if (!profiled || !commutative) {
    rec.inapplicable("prime_pair_adjacency", profiled ? "noncommutative ring" : "ring profile unavailable");
  } else {
    const auto& p = *a.entry->profile;
    std::vector<const Ideal*> primes;
    for (const auto& i : p.lattice.ideals)
      if (classify_ideal(r, i, p.lattice).prime) primes.push_back(&i);
    std::size_t pairs = 0;
    std::optional<json> cx;
    for (std::size_t i = 0; i < primes.size() && !cx; ++i)
      for (std::size_t j = i + 1; j < primes.size() && !cx; ++j) {
        if ((primes[i]->members & primes[j]->members).count() != 1) continue;
        ++pairs;
        primes[i]->members.for_each([&](std::size_t x) {
          if (x == 0 || cx) return;
          primes[j]->members.for_each([&](std::size_t y) {
            if (y == 0 || cx) return;
            const auto u = vertex_of(g, static_cast<Element>(x));
            const auto v = vertex_of(g, static_cast<Element>(y));
            if (!u || !v || !g.adjacent(*u, *v)) cx = pair_json(a, static_cast<Element>(x), static_cast<Element>(y));
          });
        });
      }
    if (pairs == 0 && !cx) {
      rec.inapplicable("prime_pair_adjacency", "no pair of primes meeting in zero");
    } else {
      rec.verdict("prime_pair_adjacency", !cx, std::to_string(pairs) + " prime pair(s) with zero intersection",
                  cx.value_or(json(nullptr)));
    }
  }

  // Clique bound from minimal primes or an explicit product decomposition.
  {
    std::size_t bound = 0;
    std::string source;
    if (profiled && commutative) {
      const auto& mins = a.entry->profile->spectrum.minimal_primes;
      const bool nonzero = std::none_of(mins.begin(), mins.end(), [](const Ideal& i) { return i.is_zero(); });
      if (mins.size() >= 2 && nonzero) {
        bound = mins.size();
        source = "minimal primes";
      }
    }
    const auto& spec = a.entry->spec;
    if (spec.kind == RingSpec::Kind::product && spec.children.size() >= 2 && spec.children.size() > bound) {
      bound = spec.children.size();
      source = "product factors";
    }
    if (bound == 0) {
      rec.inapplicable("clique_bound", "fewer than two nonzero minimal primes and not an explicit product");
    } else {
      rec.verdict("clique_bound", inv.clique_number >= bound,
                  "clique number " + std::to_string(inv.clique_number) + " >= " + std::to_string(bound) + " (" +
                      source + ")",
                  json{{"clique_number", inv.clique_number}, {"bound", bound}, {"source", source}});
    }
  }

  // Idempotents e and 1 - e.
  {
    const auto idem = classify_elements(r).idempotents;
    std::size_t tested = 0;
    std::optional<json> cx;
    idem.for_each([&](std::size_t e) {
      if (e == 0 || e == r.one() || cx) return;
      ++tested;
      const auto x = static_cast<Element>(e);
      const auto y = r.sub(r.one(), x);
      const auto u = vertex_of(g, x);
      const auto v = vertex_of(g, y);
      if (!u || !v || !g.adjacent(*u, *v)) cx = pair_json(a, x, y);
    });
    if (tested == 0) {
      rec.inapplicable("idempotent_adjacency", "no nontrivial idempotent");
    } else {
      rec.verdict("idempotent_adjacency", !cx, std::to_string(tested) + " nontrivial idempotent(s)",
                  cx.value_or(json(nullptr)));
    }
  }

  // ZA complete => co-annihilating ideal graph complete.
  if (!a.coann) {
    rec.inapplicable("complete_implies_coann_complete", commutative ? "ideal lattice unavailable" : "noncommutative ring");
  } else if (!inv.shape.complete) {
    rec.pass("complete_implies_coann_complete", "antecedent false: ZA not complete");
  } else {
    json cx = nullptr;
    const auto& c = *a.coann;
    for (std::size_t u = 0; u < c.vertex_count() && cx.is_null(); ++u)
      for (std::size_t v = u + 1; v < c.vertex_count() && cx.is_null(); ++v)
        if (!c.adjacent(u, v)) cx = json{{"I", c.label(u)}, {"J", c.label(v)}};
    const bool ok = cx.is_null();
    rec.verdict("complete_implies_coann_complete", ok, "ZA complete; ideal graph must be complete", std::move(cx));
  }

  rec.verdict("chromatic_at_least_clique", inv.chromatic_number >= inv.clique_number,
              "chromatic " + std::to_string(inv.chromatic_number) + ", clique " + std::to_string(inv.clique_number),
              json{{"chromatic_number", inv.chromatic_number}, {"clique_number", inv.clique_number}});

  if (!profiled || !commutative) {
    rec.inapplicable("reduced_product_of_fields", profiled ? "noncommutative ring" : "ring profile unavailable");
  } else if (!a.entry->profile->predicates.reduced) {
    rec.inapplicable("reduced_product_of_fields", "not reduced");
  } else {
    rec.verdict("reduced_product_of_fields", a.entry->profile->crt.has_value(),
                "reduced ring must decompose into fields", json{{"jacobson_size", a.entry->profile->spectrum.jacobson_radical.size()}});
  }

  // Graph construction against the definition.
  if (r.order() > kOracleMaxOrder) {
    rec.inapplicable("za_matches_definition", "order above " + std::to_string(kOracleMaxOrder));
  } else {
    std::vector<Element> vertices;
    const auto n = static_cast<Element>(r.order());
    for (Element x = 1; x < n; ++x) {
      bool unit = false;
      for (Element y = 1; y < n && !unit; ++y) unit = r.mul(x, y) == r.one() && r.mul(y, x) == r.one();
      if (!unit) vertices.push_back(x);
    }
    json cx = nullptr;
    std::vector<std::size_t> src(vertices.begin(), vertices.end());
    if (src != g.sources()) {
      cx = json{{"vertex_count", g.vertex_count()}, {"expected_vertex_count", vertices.size()}};
    } else {
      for (std::size_t u = 0; u < vertices.size() && cx.is_null(); ++u)
        for (std::size_t v = u + 1; v < vertices.size() && cx.is_null(); ++v)
          if (oracle_adjacent(r, vertices[u], vertices[v]) != g.adjacent(u, v))
            cx = json{{"x", g.label(u)}, {"y", g.label(v)}, {"graph_adjacent", g.adjacent(u, v)},
                      {"oracle_adjacent", !g.adjacent(u, v)}};
    }
    const bool ok = cx.is_null();
    rec.verdict("za_matches_definition", ok, std::to_string(vertices.size()) + " vertices checked pairwise",
                std::move(cx));
  }
  return rec.take();
}

std::vector<CheckRecord> run_checks(const RingAnalysis& a) {
  std::vector<CheckRecord> out;
  using Group = std::vector<CheckRecord> (*)(const RingAnalysis&);
  for (Group group : {Group{check_classifications}, Group{check_metrics}, Group{check_structure_lemmas}}) {
    const auto start = std::chrono::steady_clock::now();
    auto records = group(a);
    const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    for (auto& r : records) {
      r.elapsed = elapsed / static_cast<long>(std::max<std::size_t>(records.size(), 1));
      out.push_back(std::move(r));
    }
  }
  // Canonical order: the traceability table.
  auto rank = [](const std::string& id) {
    const auto t = theorem_table();
    return std::find_if(t.begin(), t.end(), [&](const TheoremInfo& i) { return i.id == id; }) - t.begin();
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return rank(x.check_id) < rank(y.check_id); });
  return out;
}

TheoremReport run_suite(std::span<const RingCatalogEntry> catalog, const SuiteOptions& opts) {
  std::vector<std::vector<CheckRecord>> per_entry(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      try {
        per_entry[i] = run_checks(analyze(catalog[i], opts.invariants));
      } catch (const Error& e) {
        per_entry[i] = {CheckRecord{"analysis", catalog[i].provenance, Verdict::skipped,
                                    std::string(errc_name(e.code())) + ": " + e.what(), nullptr, {}}};
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(catalog.size(), 1)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  TheoremReport report;
  report.rings = catalog.size();
  for (auto& records : per_entry)
    for (auto& r : records) {
      switch (r.verdict) {
        case Verdict::pass: ++report.pass; break;
        case Verdict::fail: ++report.fail; break;
        case Verdict::inapplicable: ++report.inapplicable; break;
        case Verdict::skipped: ++report.skipped; break;
      }
      report.records.push_back(std::move(r));
    }
  return report;
}

json record_json(const CheckRecord& r, bool with_timing) {
  json j{{"check", r.check_id},
         {"ring", r.ring},
         {"verdict", verdict_name(r.verdict)},
         {"detail", r.detail},
         {"counterexample", r.counterexample}};
  if (with_timing) j["elapsed_us"] = r.elapsed.count();
  return j;
}

json report_json(const TheoremReport& report, bool with_timing) {
  json theorems = json::array();
  for (const auto& t : theorem_table())
    theorems.push_back(json{{"id", t.id}, {"statement", t.statement}, {"runtime_check", t.runtime_check}, {"note", t.note}});
  json checks = json::array();
  for (const auto& r : report.records) checks.push_back(record_json(r, with_timing));
  return json{{"summary",
               json{{"rings", report.rings},
                    {"checks", report.records.size()},
                    {"pass", report.pass},
                    {"fail", report.fail},
                    {"inapplicable", report.inapplicable},
                    {"skipped", report.skipped}}},
              {"theorems", std::move(theorems)},
              {"checks", std::move(checks)}};
}

std::string report_text(const TheoremReport& report, bool with_timing) {
  std::ostringstream os;
  os << "rings " << report.rings << "  checks " << report.records.size() << "  pass " << report.pass << "  fail "
     << report.fail << "  inapplicable " << report.inapplicable << "  skipped " << report.skipped << '\n';
  for (const auto& r : report.records) {
    std::string v(verdict_name(r.verdict));
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    os << '[' << v << "] " << r.check_id << "  " << r.ring << "  " << r.detail;
    if (!r.counterexample.is_null()) os << "  counterexample " << r.counterexample.dump();
    if (with_timing) os << "  (" << r.elapsed.count() << " us)";
    os << '\n';
  }
  for (const auto& t : theorem_table())
    if (!t.note.empty()) os << "note " << t.id << ": " << t.note << '\n';
  os << (report.ok() ? "result: PASS" : "result: FAIL") << '\n';
  return os.str();
}

}  // namespace zag
