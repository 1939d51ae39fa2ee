#pragma once

#include "zagraph/polynomial.hpp"
#include "zagraph/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zag {

// Abstract syntax of a ring expression such as "Z2 x GF(4)" or "M2(Z3)".
//
//   expr  := atom ( "x" atom )*
//   atom  := "Z" nat | "GF(" nat ")" | "M" nat "(" expr ")"
//          | "Z" nat "[x]/(" poly ")" | "(" expr ")"
//   poly  := monomial ( "+" monomial )*
//   monomial := nat | nat "x^" nat | "x^" nat | nat "x" | "x"
//
// At expression level "x" is the direct-product operator; inside "/( ... )"
// it is the indeterminate.
struct RingSpec {
  enum class Kind { zmod, gf, product, matrix, poly_quotient };

  Kind kind = Kind::zmod;
  // Z modulus, GF order, matrix size, or quotient coefficient modulus.
  std::uint64_t n = 0;
  // Product factors, or the single entry ring of a matrix ring.
  std::vector<RingSpec> children;
  std::optional<Polynomial> modulus;

  static RingSpec zmod(std::uint64_t n);
  static RingSpec gf(std::uint64_t q);
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec matrix(std::uint64_t k, RingSpec entries);
  static RingSpec poly_quotient(std::uint64_t n, Polynomial f);

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// Throws Error(Errc::syntax) with byte offset and expected tokens, or
// Error(Errc::semantic) for out-of-range arguments.
RingSpec parse_ring_expr(std::string_view text);

// Canonical text form; parse_ring_expr(render(s)) == s.
std::string render(const RingSpec& spec);

// Builds the ring; its label is render(spec).
FiniteRing elaborate(const RingSpec& spec, const RingLimits& limits = {});

}  // namespace zag
