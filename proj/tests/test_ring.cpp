#include "oracles.hpp"
#include "support.hpp"

#include "zagraph/harness.hpp"
#include "zagraph/polynomial.hpp"
#include "zagraph/ring.hpp"

using namespace zag;
using zag::test::error_code;
using zag::test::members;

TEST_SUITE("ring") {

TEST_CASE("integers modulo n") {
  const auto z2 = make_zn(2);
  CHECK(z2.order() == 2);
  CHECK(z2.one() == 1);

  const auto z6 = make_zn(6);
  CHECK(z6.mul(2, 3) == 0);
  CHECK(z6.add(4, 5) == 3);
  CHECK(z6.neg(2) == 4);
  CHECK(z6.pow(5, 3) == 5);
  CHECK(z6.label() == "Z6");

  CHECK(error_code([] { make_zn(1); }) == Errc::invalid_order);
  CHECK(error_code([] { make_zn(0); }) == Errc::invalid_order);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial a(3, {1, 2});     // 2x+1
  const Polynomial b(3, {2, 1, 1});  // x^2+x+2
  CHECK((a + b).to_string() == "x^2");
  CHECK((a * a).to_string() == "x^2+x+1");
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(remainder(Polynomial(3, {0, 0, 0, 1}), b).to_string() == "2x+2");
  CHECK(Polynomial(4, {5, 4}).to_string() == "1");
  CHECK(Polynomial::monomial(5, 3, 2).to_string() == "2x^3");
  CHECK(Polynomial(2, {}).to_string() == "0");
}

TEST_CASE("prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_power(8) == std::pair<std::uint64_t, unsigned>{2, 3});
  CHECK(prime_power(49) == std::pair<std::uint64_t, unsigned>{7, 2});
  CHECK_FALSE(prime_power(6));
  CHECK_FALSE(prime_power(1));
}

TEST_CASE("irreducible polynomials") {
  CHECK(find_irreducible(2, 1).to_string() == "x");
  CHECK(find_irreducible(2, 2).to_string() == "x^2+x+1");
  CHECK(find_irreducible(3, 2).to_string() == "x^2+1");
  CHECK(find_irreducible(2, 3).to_string() == "x^3+x^2+1");
  CHECK(error_code([] { find_irreducible(4, 1); }) == Errc::invalid_characteristic);

  // Over Z_2 exactly x^2+x+1 is an irreducible quadratic.
  int count = 0;
  for (std::uint64_t c0 = 0; c0 < 2; ++c0)
    for (std::uint64_t c1 = 0; c1 < 2; ++c1) count += is_irreducible(Polynomial(2, {c0, c1, 1}));
  CHECK(count == 1);
}

TEST_CASE("finite fields") {
  const auto f5 = make_gf(5, 1);
  CHECK(f5.order() == 5);
  CHECK(classify_elements(f5).units.count() == 4);

  const auto f4 = make_gf(2, 2);
  CHECK(f4.order() == 4);
  // Multiplicative group is cyclic of order 3: some element has order 3.
  bool cyclic = false;
  for (Element g = 1; g < 4; ++g) cyclic |= f4.pow(g, 1) != f4.one() && f4.pow(g, 2) != f4.one() && f4.pow(g, 3) == f4.one();
  CHECK(cyclic);

  CHECK(error_code([] { make_gf(4, 1); }) == Errc::invalid_characteristic);

  for (auto [p, s] : {std::pair{2U, 3U}, {3U, 2U}, {2U, 4U}, {7U, 2U}}) {
    CAPTURE(p);
    CAPTURE(s);
    const auto f = make_gf(p, s);
    CHECK(classify_elements(f).units.count() == f.order() - 1);
    CHECK(same_tables(f, make_poly_quotient(p, find_irreducible(p, s))));
  }
}

TEST_CASE("polynomial quotients") {
  const auto dual = make_poly_quotient(2, Polynomial(2, {0, 0, 1}));
  CHECK(dual.order() == 4);
  CHECK(dual.label() == "Z2[x]/(x^2)");
  const auto x = zag::test::element(dual, "x");
  CHECK(dual.mul(x, x) == 0);

  const auto f4 = make_poly_quotient(2, Polynomial(2, {1, 1, 1}));
  CHECK(f4.order() == 4);
  CHECK(is_field(f4));
  CHECK(same_tables(f4, make_gf(2, 2)));

  // A zero leading term is trimmed away, leaving the monic x+1.
  CHECK(make_poly_quotient(2, Polynomial(2, {1, 1, 0})).order() == 2);
  CHECK(error_code([] { make_poly_quotient(6, Polynomial(6, {1, 3})); }) == Errc::non_monic_modulus);
  CHECK(error_code([] { make_poly_quotient(4, Polynomial(4, {1, 2})); }) == Errc::non_monic_modulus);
  CHECK(error_code([] { make_poly_quotient(2, Polynomial(2, {1})); }) == Errc::invalid_polynomial);
}

TEST_CASE("direct products") {
  const std::vector<FiniteRing> twos{make_zn(2), make_zn(2)};
  const auto v = make_product(twos);
  CHECK(v.order() == 4);
  CHECK(v.element_label(v.one()) == "(1,1)");
  CHECK(v.label() == "Z2 x Z2");

  const std::vector<FiniteRing> fives{make_gf(5, 1), make_gf(5, 1)};
  CHECK(make_product(fives).order() == 25);
  const std::vector<FiniteRing> mixed{make_zn(2), make_gf(2, 2)};
  CHECK(make_product(mixed).order() == 8);

  CHECK(error_code([] { make_product({}); }) == Errc::empty_product);
}

TEST_CASE("matrix rings") {
  const auto z2 = make_zn(2);
  const auto m1 = make_matrix_ring(z2, 1);
  CHECK(m1.order() == 2);
  CHECK(m1.commutative());

  const auto m2 = make_matrix_ring(z2, 2);
  CHECK(m2.order() == 16);
  CHECK_FALSE(m2.commutative());
  CHECK(m2.element_label(m2.one()) == "[[1,0],[0,1]]");

  const auto m3 = make_matrix_ring(make_zn(3), 2);
  CHECK(m3.order() == 81);

  // Unit counts against the determinant criterion.
  for (const auto* m : {&m2, &m3}) {
    const std::size_t base = m == &m2 ? 2 : 3;
    std::size_t invertible = 0;
    for (Element a = 0; a < m->order(); ++a) {
      const auto e = matrix_entries(a, base, 2);
      invertible += (e[0] * e[3] + base * base - e[1] * e[2]) % base != 0;
    }
    CHECK(classify_elements(*m).units.count() == invertible);
  }
  CHECK(classify_elements(m2).units.count() == 6);
  CHECK(classify_elements(m3).units.count() == 48);

  CHECK(error_code([&] { make_matrix_ring(m2, 2); }) == Errc::non_commutative_base);
  CHECK(error_code([&] { make_matrix_ring(make_zn(5), 4, RingLimits{4096, 1000}); }) == Errc::capacity);
}

TEST_CASE("laws above the table cap are evaluated on demand") {
  const auto tab = make_matrix_ring(make_zn(3), 2);
  const auto lazy = make_matrix_ring(make_zn(3), 2, RingLimits{16, kDefaultMaxOrder});
  CHECK(tab.tabulated());
  CHECK_FALSE(lazy.tabulated());
  for (Element a = 0; a < 81; ++a)
    for (Element b = 0; b < 81; ++b) {
      REQUIRE(tab.mul(a, b) == lazy.mul(a, b));
      REQUIRE(tab.add(a, b) == lazy.add(a, b));
    }
}

TEST_CASE("axiom audit") {
  CHECK(ring_axiom_audit(make_zn(12)).passed());

  const auto m2 = make_matrix_ring(make_zn(2), 2);
  const auto audit = ring_axiom_audit(m2);
  CHECK(audit.passed());
  REQUIRE(audit.noncommuting);
  const auto [a, b] = *audit.noncommuting;
  CHECK(m2.mul(a, b) != m2.mul(b, a));

  std::vector<Element> add(36), mul(36);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) {
      add[x * 6 + y] = (x + y) % 6;
      mul[x * 6 + y] = (x * y) % 6;
    }
  mul[2 * 6 + 3] = 1;
  const auto bad = FiniteRing::from_tables("broken", 6, 1, add, mul, false);
  const auto fail = ring_axiom_audit(bad);
  REQUIRE(fail.failure);
  CHECK_FALSE(fail.failure->law.empty());

  // A commutative ring wrongly flagged noncommutative is also caught.
  std::vector<Element> zadd(4), zmul(4);
  for (Element x = 0; x < 2; ++x)
    for (Element y = 0; y < 2; ++y) {
      zadd[x * 2 + y] = x ^ y;
      zmul[x * 2 + y] = x & y;
    }
  CHECK(ring_axiom_audit(FiniteRing::from_tables("flag", 2, 1, zadd, zmul, false)).failure);
}

TEST_CASE("element classes") {
  const auto z6 = classify_elements(make_zn(6));
  CHECK(members(z6.units) == std::vector<std::size_t>{1, 5});
  CHECK(members(z6.idempotents) == std::vector<std::size_t>{0, 1, 3, 4});
  CHECK(members(z6.nilpotents) == std::vector<std::size_t>{0});
  CHECK(members(z6.zero_divisors) == std::vector<std::size_t>{0, 2, 3, 4});
  CHECK(members(z6.nonzero_nonunits) == std::vector<std::size_t>{2, 3, 4});

  CHECK(classify_elements(make_gf(7, 1)).nonzero_nonunits.none());

  const auto z8 = classify_elements(make_zn(8));
  CHECK(members(z8.nilpotents) == std::vector<std::size_t>{0, 2, 4, 6});
  CHECK(members(z8.nonzero_nonunits) == std::vector<std::size_t>{2, 4, 6});
}

TEST_CASE("annihilators") {
  const auto z6 = make_zn(6);
  CHECK(members(annihilator(z6, 2, Side::two_sided)) == std::vector<std::size_t>{0, 3});
  for (auto side : {Side::left, Side::right, Side::two_sided}) {
    CHECK(annihilator(z6, 0, side).count() == 6);
    CHECK(members(annihilator(z6, 1, side)) == std::vector<std::size_t>{0});
  }

  const auto m2 = make_matrix_ring(make_zn(2), 2);
  const std::vector<Element> e11{1, 0, 0, 0};
  const auto left = annihilator(m2, matrix_element(e11, 2), Side::left);
  CHECK(left.count() == 4);
  left.for_each([&](std::size_t m) {
    const auto e = matrix_entries(static_cast<Element>(m), 2, 2);
    CHECK(e[0] == 0);
    CHECK(e[2] == 0);
  });
  const auto right = annihilator(m2, matrix_element(e11, 2), Side::right);
  right.for_each([&](std::size_t m) {
    const auto e = matrix_entries(static_cast<Element>(m), 2, 2);
    CHECK(e[0] == 0);
    CHECK(e[1] == 0);
  });
  CHECK(left != right);
}

TEST_CASE("properties over the catalog") {
  const auto catalog = build_catalog(CatalogLimits{64, {Family::zn, Family::gf, Family::products, Family::local, Family::matrix}});
  REQUIRE(catalog.size() > 100);
  for (const auto& e : catalog) {
    CAPTURE(e.provenance);
    const auto& r = e.ring;
    REQUIRE(ring_axiom_audit(r).passed());
    const auto cls = classify_elements(r);
    for (Element x = 0; x < r.order(); ++x) {
      const auto left = annihilator(r, x, Side::left);
      const auto right = annihilator(r, x, Side::right);
      if (r.commutative()) REQUIRE(left == right);
      // Left annihilators are left ideals, right annihilators right ideals.
      left.for_each([&](std::size_t a) {
        left.for_each([&](std::size_t b) { REQUIRE(left.test(r.add(static_cast<Element>(a), static_cast<Element>(b)))); });
        for (Element m = 0; m < r.order(); ++m) REQUIRE(left.test(r.mul(m, static_cast<Element>(a))));
      });
      right.for_each([&](std::size_t a) {
        for (Element m = 0; m < r.order(); ++m) REQUIRE(right.test(r.mul(static_cast<Element>(a), m)));
      });
      if (cls.nonzero_nonunits.test(x)) REQUIRE(cls.zero_divisors.test(x));
      REQUIRE(cls.units.test(x) == oracle::is_unit(r, x));
    }
  }
}

TEST_CASE("unit counts match Euler phi") {
  for (std::uint64_t n = 2; n <= 120; ++n) {
    CAPTURE(n);
    CHECK(classify_elements(make_zn(n)).units.count() == oracle::euler_phi(n));
  }
}

}  // TEST_SUITE
