#include "zagraph/ideal.hpp"

#include "zagraph/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace zag {

bool canonical_less(const Ideal& a, const Ideal& b) noexcept {
  const auto ca = a.size();
  const auto cb = b.size();
  if (ca != cb) return ca < cb;
  return a.members < b.members;
}

bool is_ideal(const FiniteRing& r, const ElementSet& s) {
  if (!s.test(0)) return false;
  const auto members = s.members();
  const auto n = static_cast<Element>(r.order());
  for (auto a : members) {
    for (auto b : members)
      if (!s.test(r.add(static_cast<Element>(a), static_cast<Element>(b)))) return false;
    for (Element x = 0; x < n; ++x)
      if (!s.test(r.mul(x, static_cast<Element>(a))) || !s.test(r.mul(static_cast<Element>(a), x))) return false;
  }
  return true;
}

Ideal ideal_span(const FiniteRing& r, const ElementSet& generators) {
  const auto n = static_cast<Element>(r.order());
  ElementSet in(n);
  std::vector<Element> list;
  list.reserve(n);
  auto push = [&](Element x) {
    if (!in.test(x)) {
      in.set(x);
      list.push_back(x);
    }
  };
  push(0);
  generators.for_each([&](std::size_t g) { push(static_cast<Element>(g)); });
  // Each popped element is multiplied by every ring element on both sides and
  // added to every element already collected; any pair (a, b) is covered when
  // the later of the two is popped.
  for (std::size_t head = 0; head < list.size(); ++head) {
    const Element a = list[head];
    for (Element x = 0; x < n; ++x) {
      push(r.mul(x, a));
      if (!r.commutative()) push(r.mul(a, x));
    }
    for (std::size_t j = 0; j <= head; ++j) push(r.add(a, list[j]));
  }
  return Ideal{std::move(in)};
}

Ideal zero_ideal(const FiniteRing& r) { return Ideal{ElementSet(r.order(), {0})}; }
Ideal unit_ideal(const FiniteRing& r) { return Ideal{ElementSet::full(r.order())}; }

std::size_t IdealLattice::index_of(const Ideal& i) const {
  auto it = std::find(ideals.begin(), ideals.end(), i);
  if (it == ideals.end()) throw Error(Errc::invalid_argument, "ideal not in lattice");
  return static_cast<std::size_t>(it - ideals.begin());
}

namespace {

// I + J for ideals, which is already closed under multiplication.
Ideal sum_of_ideals(const FiniteRing& r, const Ideal& i, const Ideal& j) {
  ElementSet s(r.order());
  const auto jm = j.members.members();
  i.members.for_each([&](std::size_t a) {
    for (auto b : jm) s.set(r.add(static_cast<Element>(a), static_cast<Element>(b)));
  });
  return Ideal{std::move(s)};
}

}  // namespace

IdealLattice ideal_lattice(const FiniteRing& r, std::size_t cap) {
  const auto n = static_cast<Element>(r.order());
  std::vector<Ideal> found;
  std::vector<std::optional<Element>> gens;
  std::unordered_map<ElementSet, std::size_t, BitSetHash> seen;

  auto insert = [&](Ideal i, std::optional<Element> g) {
    auto [it, fresh] = seen.try_emplace(i.members, found.size());
    if (!fresh) {
      if (!gens[it->second] && g) gens[it->second] = g;
      return;
    }
    if (found.size() == cap)
      throw Error(Errc::capacity, "ideal lattice of " + r.label() + " exceeds " + std::to_string(cap) + " ideals");
    found.push_back(std::move(i));
    gens.push_back(g);
  };

  for (Element x = 0; x < n; ++x) {
    ElementSet g(n);
    g.set(x);
    insert(ideal_span(r, g), x);
  }
  // Every ideal of a finite ring is a finite sum of principal ideals.
  for (std::size_t a = 0; a < found.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      if (found[b].members.is_subset_of(found[a].members) || found[a].members.is_subset_of(found[b].members)) continue;
      insert(sum_of_ideals(r, found[a], found[b]), std::nullopt);
    }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return canonical_less(found[x], found[y]); });
  IdealLattice out;
  out.ideals.reserve(found.size());
  for (auto k : order) {
    out.ideals.push_back(std::move(found[k]));
    out.principal_generator.push_back(gens[k]);
  }
  return out;
}

std::vector<Ideal> all_ideals(const FiniteRing& r, std::size_t cap) { return ideal_lattice(r, cap).ideals; }

IdealAlgebra ideal_algebra(const FiniteRing& r, const Ideal& i, const Ideal& j) {
  ElementSet products(r.order());
  const auto jm = j.members.members();
  i.members.for_each([&](std::size_t a) {
    for (auto b : jm) products.set(r.mul(static_cast<Element>(a), static_cast<Element>(b)));
  });
  return IdealAlgebra{sum_of_ideals(r, i, j), Ideal{i.members & j.members}, ideal_span(r, products)};
}

Ideal ideal_annihilator(const FiniteRing& r, const Ideal& i) {
  const auto n = static_cast<Element>(r.order());
  const auto members = i.members.members();
  ElementSet out(n);
  for (Element x = 0; x < n; ++x) {
    bool kills = true;
    for (auto a : members) {
      const auto e = static_cast<Element>(a);
      if (r.mul(x, e) != 0 || (!r.commutative() && r.mul(e, x) != 0)) {
        kills = false;
        break;
      }
    }
    out.assign(x, kills);
  }
  return Ideal{std::move(out)};
}

IdealKind classify_ideal(const FiniteRing& r, const Ideal& i, const IdealLattice& lattice) {
  IdealKind k;
  k.proper = !i.contains(r.one());
  if (!k.proper) return k;
  const auto n = static_cast<Element>(r.order());
  k.prime = true;
  for (Element a = 0; a < n && k.prime; ++a) {
    if (i.contains(a)) continue;
    for (Element b = 0; b < n; ++b)
      if (!i.contains(b) && i.contains(r.mul(a, b))) {
        k.prime = false;
        break;
      }
  }
  k.maximal = true;
  for (const auto& j : lattice.ideals) {
    if (j.members == i.members || j.contains(r.one())) continue;
    if (i.members.is_subset_of(j.members)) {
      k.maximal = false;
      break;
    }
  }
  return k;
}

IdealKind classify_ideal(const FiniteRing& r, const Ideal& i) { return classify_ideal(r, i, ideal_lattice(r)); }

SpectrumSummary spectrum(const FiniteRing& r, const IdealLattice& lattice) {
  SpectrumSummary s{{}, {}, unit_ideal(r)};
  std::vector<Ideal> primes;
  for (const auto& i : lattice.ideals) {
    const auto k = classify_ideal(r, i, lattice);
    if (k.prime) primes.push_back(i);
    if (k.maximal) {
      s.maximal_ideals.push_back(i);
      s.jacobson_radical.members &= i.members;
    }
  }
  for (const auto& p : primes) {
    const bool minimal = std::none_of(primes.begin(), primes.end(), [&](const Ideal& q) {
      return q.members != p.members && q.members.is_subset_of(p.members);
    });
    if (minimal) s.minimal_primes.push_back(p);
  }
  return s;
}

SpectrumSummary spectrum(const FiniteRing& r) { return spectrum(r, ideal_lattice(r)); }

FiniteRing quotient_ring(const FiniteRing& r, const Ideal& i, const RingLimits& limits) {
  if (i.contains(r.one())) throw Error(Errc::invalid_quotient, "quotient by a non-proper ideal");
  const auto n = static_cast<Element>(r.order());
  constexpr Element kUnset = ~Element{0};
  auto coset = std::make_shared<std::vector<Element>>(n, kUnset);
  auto reps = std::make_shared<std::vector<Element>>();
  const auto members = i.members.members();
  for (Element x = 0; x < n; ++x) {
    if ((*coset)[x] != kUnset) continue;
    const auto id = static_cast<Element>(reps->size());
    reps->push_back(x);
    for (auto m : members) (*coset)[r.add(x, static_cast<Element>(m))] = id;
  }
  std::shared_ptr<const std::vector<Element>> cs = coset, rs = reps;
  FiniteRing::Laws laws{
      [r, cs, rs](Element a, Element b) { return (*cs)[r.add((*rs)[a], (*rs)[b])]; },
      [r, cs, rs](Element a, Element b) { return (*cs)[r.mul((*rs)[a], (*rs)[b])]; },
      [r, cs, rs](Element a) { return (*cs)[r.neg((*rs)[a])]; },
      [r, rs](Element a) { return r.element_label((*rs)[a]); },
  };
  const std::string label = r.label() + "/I" + std::to_string(members.size());
  return FiniteRing(label, reps->size(), (*coset)[r.one()], std::move(laws), r.commutative(), limits.max_table_order);
}

bool is_field(const FiniteRing& r) {
  if (!r.commutative()) return false;
  const auto n = static_cast<Element>(r.order());
  for (Element x = 1; x < n; ++x) {
    bool unit = false;
    for (Element y = 1; y < n && !unit; ++y) unit = r.mul(x, y) == r.one();
    if (!unit) return false;
  }
  return true;
}

RingPredicates ring_predicates(const FiniteRing& r, const IdealLattice& lattice, const SpectrumSummary& spec) {
  RingPredicates p;
  const auto classes = classify_elements(r);
  p.local = spec.maximal_ideals.size() == 1;
  p.field = r.commutative() && classes.units.count() == r.order() - 1;
  p.chained = true;
  for (std::size_t a = 0; a < lattice.ideals.size() && p.chained; ++a)
    for (std::size_t b = 0; b < a; ++b) {
      const auto& x = lattice.ideals[a].members;
      const auto& y = lattice.ideals[b].members;
      if (!x.is_subset_of(y) && !y.is_subset_of(x)) {
        p.chained = false;
        break;
      }
    }
  p.bezout = std::all_of(lattice.principal_generator.begin(), lattice.principal_generator.end(),
                         [](const auto& g) { return g.has_value(); });
  p.reduced = classes.nilpotents.count() == 1;
  p.semiprimitive = spec.jacobson_radical.is_zero();
  p.integral_domain = r.commutative() && classes.zero_divisors.count() == 1;
  return p;
}

RingPredicates ring_predicates(const FiniteRing& r) {
  const auto lattice = ideal_lattice(r);
  return ring_predicates(r, lattice, spectrum(r, lattice));
}

std::optional<std::vector<FiniteRing>> crt_decompose(const FiniteRing& r, const SpectrumSummary& spec) {
  if (!spec.jacobson_radical.is_zero()) return std::nullopt;
  std::vector<FiniteRing> parts;
  std::size_t product = 1;
  for (const auto& m : spec.maximal_ideals) {
    auto q = quotient_ring(r, m);
    if (!is_field(q)) return std::nullopt;
    product *= q.order();
    parts.push_back(std::move(q));
  }
  if (product != r.order()) return std::nullopt;
  // Smallest field first, e.g. Z6 -> [Z2, Z3].
  std::stable_sort(parts.begin(), parts.end(), [](const FiniteRing& a, const FiniteRing& b) { return a.order() < b.order(); });
  return parts;
}

std::optional<std::vector<FiniteRing>> crt_decompose(const FiniteRing& r) { return crt_decompose(r, spectrum(r)); }

}  // namespace zag
