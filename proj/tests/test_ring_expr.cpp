#include "support.hpp"

#include "zagraph/harness.hpp"
#include "zagraph/ring_expr.hpp"

using namespace zag;
using zag::test::error_code;

namespace {

std::string message(std::string_view text) {
  try {
    parse_ring_expr(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("ring_expr") {

TEST_CASE("parsing") {
  CHECK(parse_ring_expr("Z5 x Z5") == RingSpec::product({RingSpec::zmod(5), RingSpec::zmod(5)}));
  CHECK(parse_ring_expr("Z2[x]/(x^2)") == RingSpec::poly_quotient(2, Polynomial(2, {0, 0, 1})));
  CHECK(parse_ring_expr("  GF( 4 )x Z2 ") == RingSpec::product({RingSpec::gf(4), RingSpec::zmod(2)}));
  CHECK(parse_ring_expr("M2(Z3)") == RingSpec::matrix(2, RingSpec::zmod(3)));
  CHECK(parse_ring_expr("M2(Z2 x Z2)") ==
        RingSpec::matrix(2, RingSpec::product({RingSpec::zmod(2), RingSpec::zmod(2)})));
  CHECK(parse_ring_expr("Z4[x]/(x^2+2)") == RingSpec::poly_quotient(4, Polynomial(4, {2, 0, 1})));
  CHECK(parse_ring_expr("Z3[x]/(x^2 + 2x + 1)") == RingSpec::poly_quotient(3, Polynomial(3, {1, 2, 1})));
  CHECK(parse_ring_expr("Z2[x]/(x+x^3)") == RingSpec::poly_quotient(2, Polynomial(2, {0, 1, 0, 1})));
  CHECK(parse_ring_expr("(Z2 x Z3) x Z5").children.front() ==
        RingSpec::product({RingSpec::zmod(2), RingSpec::zmod(3)}));
  CHECK(parse_ring_expr("(Z7)") == RingSpec::zmod(7));
}

TEST_CASE("syntax errors carry offsets and expectations") {
  CHECK(error_code([] { parse_ring_expr("Z5 x"); }) == Errc::syntax);
  CHECK(message("Z5 x") == "offset 4: expected 'Z' | 'GF(' | 'M' | '(' but found end of input");
  CHECK(message("").starts_with("offset 0: expected"));
  CHECK(message("Z5 y").starts_with("offset 3:"));
  CHECK(message("GF(4").starts_with("offset 4:"));
  CHECK(error_code([] { parse_ring_expr("Z"); }) == Errc::syntax);
  CHECK(error_code([] { parse_ring_expr("Z2[x]/(x^)"); }) == Errc::syntax);
}

TEST_CASE("semantic errors") {
  CHECK(error_code([] { parse_ring_expr("GF(6)"); }) == Errc::semantic);
  CHECK(error_code([] { parse_ring_expr("GF(1)"); }) == Errc::semantic);
  CHECK(error_code([] { parse_ring_expr("Z1"); }) == Errc::semantic);
  CHECK(error_code([] { parse_ring_expr("Z0 x Z2"); }) == Errc::semantic);
  CHECK(error_code([] { parse_ring_expr("M0(Z2)"); }) == Errc::semantic);
  CHECK(error_code([] { parse_ring_expr("Z4[x]/(2x^2+1)"); }) == Errc::semantic);
  CHECK(error_code([] { parse_ring_expr("Z2[x]/(3)"); }) == Errc::semantic);
  CHECK(error_code([] { parse_ring_expr("Z99999999999999999999"); }) == Errc::semantic);
}

TEST_CASE("elaboration") {
  const auto r = elaborate(RingSpec::product({RingSpec::zmod(2), RingSpec::gf(4)}));
  CHECK(r.order() == 8);
  CHECK(r.label() == "Z2 x GF(4)");

  const auto m = elaborate(RingSpec::matrix(2, RingSpec::zmod(2)));
  CHECK(m.order() == 16);
  CHECK_FALSE(m.commutative());

  CHECK(same_tables(elaborate(RingSpec::zmod(2)), make_zn(2)));
  CHECK(same_tables(elaborate(RingSpec::gf(9)), make_gf(3, 2)));

  const auto nested = elaborate(parse_ring_expr("(Z2 x Z3) x Z5"));
  CHECK(nested.order() == 30);
  CHECK(nested.label() == "(Z2 x Z3) x Z5");

  try {
    elaborate(parse_ring_expr("Z2 x M2(Z5 x Z5 x Z5)"));
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::capacity);
    CHECK(std::string(e.what()).starts_with("in M2(Z5 x Z5 x Z5): "));
  }
}

TEST_CASE("render round trip over the catalog") {
  const auto catalog = build_catalog(CatalogLimits{128, {Family::zn, Family::gf, Family::products, Family::local, Family::matrix}});
  for (const auto& e : catalog) {
    CAPTURE(e.provenance);
    CHECK(render(e.spec) == e.provenance);
    CHECK(parse_ring_expr(e.provenance) == e.spec);
    CHECK(same_tables(elaborate(parse_ring_expr(e.provenance)), e.ring));
  }
}

}  // TEST_SUITE
