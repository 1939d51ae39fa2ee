#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zag {

// Univariate polynomial over Z_modulus, lowest degree first. Trailing zero
// coefficients are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial(std::uint64_t modulus, std::vector<std::uint64_t> coefficients);

  // c * x^degree
  static Polynomial monomial(std::uint64_t modulus, std::size_t degree, std::uint64_t c = 1);

  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::vector<std::uint64_t>& coefficients() const noexcept { return coeffs_; }
  std::uint64_t coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const noexcept { return leading() == 1 % modulus_ && !is_zero(); }

  // Highest degree first, e.g. "x^2+2x+1"; "0" for the zero polynomial.
  std::string to_string(char var = 'x') const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

// Remainder of a on division by a monic divisor (well defined over any Z_n).
Polynomial remainder(const Polynomial& a, const Polynomial& monic_divisor);

bool is_prime(std::uint64_t n) noexcept;

// (p, s) with q = p^s, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) noexcept;

// Smallest monic irreducible polynomial of degree s over Z_p, where candidates
// are ordered lexicographically on (c_0, c_1, ..., c_{s-1}). Irreducibility
// is certified by trial division by every monic polynomial of degree
// 1..floor(s/2).
Polynomial find_irreducible(std::uint64_t p, unsigned s);

// Trial-division irreducibility test over a prime field.
bool is_irreducible(const Polynomial& f);

}  // namespace zag
