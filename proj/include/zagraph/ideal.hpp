#pragma once

#include "zagraph/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zag {

inline constexpr std::size_t kDefaultIdealCap = 4096;

struct Ideal {
  ElementSet members;

  std::size_t size() const noexcept { return members.count(); }
  bool contains(Element x) const noexcept { return members.test(x); }
  bool is_zero() const noexcept { return members.count() == 1; }

  friend bool operator==(const Ideal&, const Ideal&) = default;
};

// Canonical ideal order: by cardinality, then by ascending member list.
bool canonical_less(const Ideal& a, const Ideal& b) noexcept;

// Ideal closure audit: contains 0, closed under +, and under multiplication
// by ring elements on both sides.
bool is_ideal(const FiniteRing& r, const ElementSet& s);

Ideal ideal_span(const FiniteRing& r, const ElementSet& generators);
Ideal zero_ideal(const FiniteRing& r);
Ideal unit_ideal(const FiniteRing& r);

struct IdealLattice {
  std::vector<Ideal> ideals;  // canonical order, {0} first and R last
  // A generator for each principal ideal (parallel to `ideals`).
  std::vector<std::optional<Element>> principal_generator;

  std::size_t index_of(const Ideal& i) const;
};

// Complete ideal lattice: closure of the principal ideals under sums.
IdealLattice ideal_lattice(const FiniteRing& r, std::size_t cap = kDefaultIdealCap);
std::vector<Ideal> all_ideals(const FiniteRing& r, std::size_t cap = kDefaultIdealCap);

struct IdealAlgebra {
  Ideal sum;
  Ideal intersection;
  Ideal product;
};

IdealAlgebra ideal_algebra(const FiniteRing& r, const Ideal& i, const Ideal& j);

Ideal ideal_annihilator(const FiniteRing& r, const Ideal& i);

struct IdealKind {
  bool proper = false;
  bool prime = false;
  bool maximal = false;
};

IdealKind classify_ideal(const FiniteRing& r, const Ideal& i, const IdealLattice& lattice);
IdealKind classify_ideal(const FiniteRing& r, const Ideal& i);

struct SpectrumSummary {
  std::vector<Ideal> maximal_ideals;
  std::vector<Ideal> minimal_primes;
  Ideal jacobson_radical;
};

SpectrumSummary spectrum(const FiniteRing& r, const IdealLattice& lattice);
SpectrumSummary spectrum(const FiniteRing& r);

// Ring on least-index coset representatives.
FiniteRing quotient_ring(const FiniteRing& r, const Ideal& i, const RingLimits& limits = {});

struct RingPredicates {
  bool local = false;
  bool field = false;
  bool chained = false;
  bool bezout = false;
  bool reduced = false;
  bool semiprimitive = false;
  bool integral_domain = false;
};

RingPredicates ring_predicates(const FiniteRing& r, const IdealLattice& lattice, const SpectrumSummary& spec);
RingPredicates ring_predicates(const FiniteRing& r);

// Quotients R/m over the maximal ideals when Jac(R) = 0, smallest first, each verified to be
// a field with the orders multiplying to |R|; nullopt otherwise.
std::optional<std::vector<FiniteRing>> crt_decompose(const FiniteRing& r, const SpectrumSummary& spec);
std::optional<std::vector<FiniteRing>> crt_decompose(const FiniteRing& r);

bool is_field(const FiniteRing& r);

}  // namespace zag
