#pragma once

#include "zagraph/bitset.hpp"
#include "zagraph/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace zag {

// Elements are canonical indices 0..order-1; index 0 is always the ring zero.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultTableOrder = 4096;
inline constexpr std::size_t kDefaultMaxOrder = std::size_t{1} << 22;

struct RingLimits {
  // Laws are tabulated up to this order and evaluated on demand above it.
  std::size_t max_table_order = kDefaultTableOrder;
  // Constructors refuse rings larger than this (capacity error).
  std::size_t max_order = kDefaultMaxOrder;
};

enum class Side { left, right, two_sided };

// Immutable, fully enumerated finite ring with identity. Copies share the
// underlying tables.
class FiniteRing {
 public:
  using Law = std::function<Element(Element, Element)>;
  using Unary = std::function<Element(Element)>;
  using Labeler = std::function<std::string(Element)>;

  struct Laws {
    Law add;
    Law mul;
    Unary neg;
    Labeler element_label;
  };

  FiniteRing(std::string label, std::size_t order, Element one, Laws laws, bool commutative,
             std::size_t max_table_order = kDefaultTableOrder);

  // Wraps explicit Cayley tables (row-major, order*order entries). Nothing is
  // validated beyond table shape; run ring_axiom_audit on the result.
  static FiniteRing from_tables(std::string label, std::size_t order, Element one, std::vector<Element> add_table,
                                std::vector<Element> mul_table, bool commutative);

  std::size_t order() const noexcept { return d_->order; }
  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return d_->one; }
  bool commutative() const noexcept { return d_->commutative; }
  bool tabulated() const noexcept { return !d_->mul_table.empty(); }

  const std::string& label() const noexcept { return label_; }
  std::string element_label(Element x) const { return d_->laws.element_label(x); }

  Element add(Element a, Element b) const {
    return d_->add_table.empty() ? d_->laws.add(a, b) : d_->add_table[index(a, b)];
  }
  Element mul(Element a, Element b) const {
    return d_->mul_table.empty() ? d_->laws.mul(a, b) : d_->mul_table[index(a, b)];
  }
  Element neg(Element a) const { return d_->neg_table[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element pow(Element a, std::uint64_t e) const;

  FiniteRing relabeled(std::string label) const {
    FiniteRing r = *this;
    r.label_ = std::move(label);
    return r;
  }

 private:
  struct Data {
    std::size_t order = 0;
    Element one = 0;
    bool commutative = false;
    Laws laws;
    std::vector<Element> add_table;
    std::vector<Element> mul_table;
    std::vector<Element> neg_table;
  };

  FiniteRing() = default;
  std::size_t index(Element a, Element b) const noexcept { return static_cast<std::size_t>(a) * d_->order + b; }

  std::string label_;
  std::shared_ptr<const Data> d_;
};

// True when both rings have the same order, identity and operation tables.
bool same_tables(const FiniteRing& a, const FiniteRing& b);

FiniteRing make_zn(std::uint64_t n, const RingLimits& limits = {});
FiniteRing make_gf(std::uint64_t p, unsigned s, const RingLimits& limits = {});
FiniteRing make_poly_quotient(std::uint64_t n, const Polynomial& f, const RingLimits& limits = {});
FiniteRing make_product(std::span<const FiniteRing> factors, const RingLimits& limits = {});
FiniteRing make_matrix_ring(const FiniteRing& base, unsigned k, const RingLimits& limits = {});

// Row-major entries of a matrix ring element, given the base ring order.
std::vector<Element> matrix_entries(Element m, std::size_t base_order, unsigned k);
Element matrix_element(std::span<const Element> entries, std::size_t base_order);

struct AuditFailure {
  std::string law;
  Element a = 0, b = 0, c = 0;
};

struct AuditResult {
  std::optional<AuditFailure> failure;
  // A pair with ab != ba, when the ring is noncommutative.
  std::optional<std::pair<Element, Element>> noncommuting;

  bool passed() const noexcept { return !failure; }
};

// Exhaustive check of the ring axioms, the identity, and the commutativity
// flag. Cubic in the order.
AuditResult ring_axiom_audit(const FiniteRing& r);

struct ElementClasses {
  ElementSet units;
  ElementSet idempotents;
  ElementSet nilpotents;
  ElementSet zero_divisors;  // includes 0
  ElementSet nonzero_nonunits;
};

ElementClasses classify_elements(const FiniteRing& r);

ElementSet annihilator(const FiniteRing& r, Element x, Side side);

}  // namespace zag
