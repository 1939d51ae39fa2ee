#include "zagraph/ring.hpp"

#include "zagraph/error.hpp"

#include <numeric>

namespace zag {

FiniteRing::FiniteRing(std::string label, std::size_t order, Element one, Laws laws, bool commutative,
                       std::size_t max_table_order)
    : label_(std::move(label)) {
  if (order < 2) throw Error(Errc::invalid_order, "ring order must be >= 2 (nonzero identity)");
  if (one == 0 || one >= order) throw Error(Errc::invalid_argument, "identity index out of range or equal to zero");
  auto d = std::make_shared<Data>();
  d->order = order;
  d->one = one;
  d->commutative = commutative;
  d->laws = std::move(laws);
  d->neg_table.resize(order);
  for (std::size_t a = 0; a < order; ++a) d->neg_table[a] = d->laws.neg(static_cast<Element>(a));
  if (order <= max_table_order) {
    d->add_table.resize(order * order);
    d->mul_table.resize(order * order);
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b) {
        d->add_table[a * order + b] = d->laws.add(static_cast<Element>(a), static_cast<Element>(b));
        d->mul_table[a * order + b] = d->laws.mul(static_cast<Element>(a), static_cast<Element>(b));
      }
  }
  d_ = std::move(d);
}

FiniteRing FiniteRing::from_tables(std::string label, std::size_t order, Element one, std::vector<Element> add_table,
                                   std::vector<Element> mul_table, bool commutative) {
  if (order < 2) throw Error(Errc::invalid_order, "ring order must be >= 2 (nonzero identity)");
  if (add_table.size() != order * order || mul_table.size() != order * order)
    throw Error(Errc::invalid_argument, "operation tables must have order*order entries");
  for (auto v : add_table)
    if (v >= order) throw Error(Errc::invalid_argument, "table entry out of range");
  for (auto v : mul_table)
    if (v >= order) throw Error(Errc::invalid_argument, "table entry out of range");
  if (one == 0 || one >= order) throw Error(Errc::invalid_argument, "identity index out of range or equal to zero");

  FiniteRing r;
  r.label_ = std::move(label);
  auto d = std::make_shared<Data>();
  d->order = order;
  d->one = one;
  d->commutative = commutative;
  d->neg_table.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (add_table[a * order + b] == 0) {
        d->neg_table[a] = static_cast<Element>(b);
        break;
      }
  d->add_table = std::move(add_table);
  d->mul_table = std::move(mul_table);
  d->laws.element_label = [](Element x) { return std::to_string(x); };
  r.d_ = std::move(d);
  return r;
}

Element FiniteRing::pow(Element a, std::uint64_t e) const {
  Element result = one();
  Element base = a;
  while (e) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

bool same_tables(const FiniteRing& a, const FiniteRing& b) {
  if (a.order() != b.order() || a.one() != b.one()) return false;
  const auto n = static_cast<Element>(a.order());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (a.add(x, y) != b.add(x, y) || a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

namespace {

void check_capacity(std::size_t order, const RingLimits& limits, const std::string& what) {
  if (order > limits.max_order)
    throw Error(Errc::capacity, what + " has order " + std::to_string(order) + ", above the limit of " +
                                    std::to_string(limits.max_order));
}

// order^exponent, or nullopt on overflow past `cap`.
std::optional<std::size_t> checked_power(std::size_t base, std::size_t exponent, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (v > cap / base) return std::nullopt;
    v *= base;
  }
  return v;
}

}  // namespace

FiniteRing make_zn(std::uint64_t n, const RingLimits& limits) {
  if (n < 2) throw Error(Errc::invalid_order, "Z_n requires n >= 2, got " + std::to_string(n));
  const std::string label = "Z" + std::to_string(n);
  check_capacity(n, limits, label);
  FiniteRing::Laws laws{
      [n](Element a, Element b) { return static_cast<Element>((std::uint64_t{a} + b) % n); },
      [n](Element a, Element b) { return static_cast<Element>((std::uint64_t{a} * b) % n); },
      [n](Element a) { return static_cast<Element>((n - a) % n); },
      [](Element a) { return std::to_string(a); },
  };
  return FiniteRing(label, n, 1, std::move(laws), true, limits.max_table_order);
}

namespace {

struct PolyCodec {
  std::uint64_t n;
  std::size_t degree;

  Polynomial decode(Element e) const {
    std::vector<std::uint64_t> c(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      c[i] = e % n;
      e = static_cast<Element>(e / n);
    }
    return Polynomial(n, std::move(c));
  }
  Element encode(const Polynomial& p) const {
    std::uint64_t e = 0;
    for (std::size_t i = degree; i-- > 0;) e = e * n + p.coefficient(i);
    return static_cast<Element>(e);
  }
};

FiniteRing build_poly_quotient(std::string label, std::uint64_t n, const Polynomial& f, const RingLimits& limits) {
  if (f.degree() < 1) throw Error(Errc::invalid_polynomial, "quotient modulus must have degree >= 1");
  if (!f.is_monic()) throw Error(Errc::non_monic_modulus, "quotient modulus " + f.to_string() + " is not monic over Z" + std::to_string(n));
  const auto degree = static_cast<std::size_t>(f.degree());
  const auto order = checked_power(n, degree, limits.max_order);
  if (!order) throw Error(Errc::capacity, label + " exceeds the order limit of " + std::to_string(limits.max_order));
  const PolyCodec codec{n, degree};
  FiniteRing::Laws laws{
      [codec](Element a, Element b) { return codec.encode(codec.decode(a) + codec.decode(b)); },
      [codec, f](Element a, Element b) { return codec.encode(remainder(codec.decode(a) * codec.decode(b), f)); },
      [codec](Element a) { return codec.encode(Polynomial(codec.n, {}) - codec.decode(a)); },
      [codec](Element a) { return codec.decode(a).to_string(); },
  };
  return FiniteRing(std::move(label), *order, 1, std::move(laws), true, limits.max_table_order);
}

}  // namespace

FiniteRing make_gf(std::uint64_t p, unsigned s, const RingLimits& limits) {
  if (!is_prime(p)) throw Error(Errc::invalid_characteristic, "GF requires a prime characteristic, got " + std::to_string(p));
  if (s < 1) throw Error(Errc::invalid_argument, "GF requires s >= 1");
  const auto q = checked_power(p, s, limits.max_order);
  if (!q) throw Error(Errc::capacity, "GF(" + std::to_string(p) + "^" + std::to_string(s) + ") exceeds the order limit");
  return build_poly_quotient("GF(" + std::to_string(*q) + ")", p, find_irreducible(p, s), limits);
}

FiniteRing make_poly_quotient(std::uint64_t n, const Polynomial& f, const RingLimits& limits) {
  if (n < 2) throw Error(Errc::invalid_order, "coefficient ring Z_n requires n >= 2");
  if (f.modulus() != n) throw Error(Errc::invalid_argument, "modulus polynomial is not over Z" + std::to_string(n));
  return build_poly_quotient("Z" + std::to_string(n) + "[x]/(" + f.to_string() + ")", n, f, limits);
}

namespace {

struct MixedRadix {
  std::vector<std::size_t> radix;
  std::vector<std::size_t> stride;  // first digit most significant

  explicit MixedRadix(std::vector<std::size_t> r) : radix(std::move(r)), stride(radix.size(), 1) {
    for (std::size_t i = radix.size(); i-- > 1;) stride[i - 1] = stride[i] * radix[i];
  }
  Element digit(Element e, std::size_t i) const { return static_cast<Element>((e / stride[i]) % radix[i]); }
};

}  // namespace

FiniteRing make_product(std::span<const FiniteRing> factors, const RingLimits& limits) {
  if (factors.empty()) throw Error(Errc::empty_product, "direct product of an empty list of rings");
  std::vector<std::size_t> radix;
  std::size_t order = 1;
  bool commutative = true;
  std::string label;
  for (const auto& f : factors) {
    if (order > limits.max_order / f.order())
      throw Error(Errc::capacity, "direct product exceeds the order limit of " + std::to_string(limits.max_order));
    order *= f.order();
    radix.push_back(f.order());
    commutative = commutative && f.commutative();
    if (!label.empty()) label += " x ";
    label += f.label().find(" x ") == std::string::npos ? f.label() : "(" + f.label() + ")";
  }
  auto parts = std::make_shared<const std::vector<FiniteRing>>(factors.begin(), factors.end());
  auto mr = std::make_shared<const MixedRadix>(std::move(radix));

  auto componentwise = [parts, mr](auto op) {
    return [parts, mr, op](Element a, Element b) {
      std::size_t e = 0;
      for (std::size_t i = 0; i < parts->size(); ++i) e += op((*parts)[i], mr->digit(a, i), mr->digit(b, i)) * mr->stride[i];
      return static_cast<Element>(e);
    };
  };
  Element one = 0;
  for (std::size_t i = 0; i < parts->size(); ++i) one += static_cast<Element>((*parts)[i].one() * mr->stride[i]);

  FiniteRing::Laws laws{
      componentwise([](const FiniteRing& r, Element x, Element y) { return r.add(x, y); }),
      componentwise([](const FiniteRing& r, Element x, Element y) { return r.mul(x, y); }),
      [parts, mr](Element a) {
        std::size_t e = 0;
        for (std::size_t i = 0; i < parts->size(); ++i) e += (*parts)[i].neg(mr->digit(a, i)) * mr->stride[i];
        return static_cast<Element>(e);
      },
      [parts, mr](Element a) {
        std::string s = "(";
        for (std::size_t i = 0; i < parts->size(); ++i) {
          if (i) s += ',';
          s += (*parts)[i].element_label(mr->digit(a, i));
        }
        return s + ")";
      },
  };
  return FiniteRing(std::move(label), order, one, std::move(laws), commutative, limits.max_table_order);
}

std::vector<Element> matrix_entries(Element m, std::size_t base_order, unsigned k) {
  std::vector<Element> e(static_cast<std::size_t>(k) * k);
  for (std::size_t i = e.size(); i-- > 0;) {
    e[i] = static_cast<Element>(m % base_order);
    m = static_cast<Element>(m / base_order);
  }
  return e;
}

Element matrix_element(std::span<const Element> entries, std::size_t base_order) {
  std::size_t m = 0;
  for (auto v : entries) m = m * base_order + v;
  return static_cast<Element>(m);
}

FiniteRing make_matrix_ring(const FiniteRing& base, unsigned k, const RingLimits& limits) {
  if (k < 1) throw Error(Errc::invalid_argument, "matrix size must be >= 1");
  if (!base.commutative()) throw Error(Errc::non_commutative_base, "matrix rings are built over commutative rings only");
  const std::string label = "M" + std::to_string(k) + "(" + base.label() + ")";
  const auto order = checked_power(base.order(), std::size_t{k} * k, limits.max_order);
  if (!order) throw Error(Errc::capacity, label + " exceeds the order limit of " + std::to_string(limits.max_order));

  const std::size_t q = base.order();
  auto add = [base, q, k](Element a, Element b) {
    auto x = matrix_entries(a, q, k);
    const auto y = matrix_entries(b, q, k);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = base.add(x[i], y[i]);
    return matrix_element(x, q);
  };
  auto mul = [base, q, k](Element a, Element b) {
    const auto x = matrix_entries(a, q, k);
    const auto y = matrix_entries(b, q, k);
    std::vector<Element> z(x.size(), 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) {
        Element acc = 0;
        for (unsigned t = 0; t < k; ++t) acc = base.add(acc, base.mul(x[i * k + t], y[t * k + j]));
        z[i * k + j] = acc;
      }
    return matrix_element(z, q);
  };
  auto neg = [base, q, k](Element a) {
    auto x = matrix_entries(a, q, k);
    for (auto& v : x) v = base.neg(v);
    return matrix_element(x, q);
  };
  auto name = [base, q, k](Element a) {
    const auto x = matrix_entries(a, q, k);
    std::string s = "[";
    for (unsigned i = 0; i < k; ++i) {
      s += i ? ",[" : "[";
      for (unsigned j = 0; j < k; ++j) {
        if (j) s += ',';
        s += base.element_label(x[i * k + j]);
      }
      s += ']';
    }
    return s + "]";
  };
  std::vector<Element> identity(std::size_t{k} * k, 0);
  for (unsigned i = 0; i < k; ++i) identity[i * k + i] = base.one();
  return FiniteRing(label, *order, matrix_element(identity, q), {add, mul, neg, name}, k == 1, limits.max_table_order);
}

AuditResult ring_axiom_audit(const FiniteRing& r) {
  AuditResult out;
  const auto n = static_cast<Element>(r.order());
  auto fail = [&](std::string law, Element a, Element b = 0, Element c = 0) {
    out.failure = AuditFailure{std::move(law), a, b, c};
  };
  if (r.one() == r.zero()) {
    fail("nonzero-identity", r.one());
    return out;
  }
  for (Element a = 0; a < n; ++a) {
    if (r.add(0, a) != a || r.add(a, 0) != a) return fail("additive-identity", a), out;
    if (r.add(a, r.neg(a)) != 0) return fail("additive-inverse", a, r.neg(a)), out;
    if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a) return fail("multiplicative-identity", a), out;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return fail("additive-commutativity", a, b), out;
      if (!out.noncommuting && r.mul(a, b) != r.mul(b, a)) out.noncommuting = std::pair{a, b};
    }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab_sum = r.add(a, b);
      const Element ab_prod = r.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (r.add(ab_sum, c) != r.add(a, r.add(b, c))) return fail("additive-associativity", a, b, c), out;
        if (r.mul(ab_prod, c) != r.mul(a, r.mul(b, c))) return fail("multiplicative-associativity", a, b, c), out;
        if (r.mul(a, r.add(b, c)) != r.add(ab_prod, r.mul(a, c))) return fail("left-distributivity", a, b, c), out;
        if (r.mul(ab_sum, c) != r.add(r.mul(a, c), r.mul(b, c))) return fail("right-distributivity", a, b, c), out;
      }
    }
  if (r.commutative() && out.noncommuting) fail("commutative-flag", out.noncommuting->first, out.noncommuting->second);
  if (!r.commutative() && !out.noncommuting) fail("commutative-flag", 0);
  return out;
}

ElementClasses classify_elements(const FiniteRing& r) {
  const auto n = static_cast<Element>(r.order());
  ElementClasses c{ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n), ElementSet(n)};
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      // In a finite ring a one-sided inverse is two-sided; both are checked anyway.
      if (r.mul(x, y) == r.one() && r.mul(y, x) == r.one()) {
        c.units.set(x);
        break;
      }
    }
    if (r.mul(x, x) == x) c.idempotents.set(x);
    Element p = x;
    for (std::size_t k = 0; k <= n && p != 0; ++k) p = r.mul(p, x);
    if (p == 0) c.nilpotents.set(x);
    if (x == 0) {
      c.zero_divisors.set(0);
      continue;
    }
    for (Element y = 1; y < n; ++y)
      if (r.mul(x, y) == 0 || r.mul(y, x) == 0) {
        c.zero_divisors.set(x);
        break;
      }
  }
  c.nonzero_nonunits = ~c.units;
  c.nonzero_nonunits.reset(0);
  return c;
}

ElementSet annihilator(const FiniteRing& r, Element x, Side side) {
  const auto n = static_cast<Element>(r.order());
  ElementSet out(n);
  for (Element m = 0; m < n; ++m) {
    switch (side) {
      case Side::left: out.assign(m, r.mul(m, x) == 0); break;
      case Side::right: out.assign(m, r.mul(x, m) == 0); break;
      case Side::two_sided: out.assign(m, r.mul(m, x) == 0 && r.mul(x, m) == 0); break;
    }
  }
  return out;
}

}  // namespace zag
