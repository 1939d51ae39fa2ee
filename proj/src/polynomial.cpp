#include "zagraph/polynomial.hpp"

#include "zagraph/error.hpp"

#include <algorithm>

namespace zag {

Polynomial::Polynomial(std::uint64_t modulus, std::vector<std::uint64_t> coefficients)
    : modulus_(modulus), coeffs_(std::move(coefficients)) {
  if (modulus_ < 2) throw Error(Errc::invalid_order, "polynomial modulus must be >= 2");
  for (auto& c : coeffs_) c %= modulus_;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(std::uint64_t modulus, std::size_t degree, std::uint64_t c) {
  std::vector<std::uint64_t> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(modulus, std::move(v));
}

std::string Polynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

namespace {

void require_same_modulus(const Polynomial& a, const Polynomial& b) {
  if (a.modulus() != b.modulus()) throw Error(Errc::invalid_argument, "polynomials over different coefficient rings");
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_modulus(a, b);
  const auto n = a.modulus();
  std::vector<std::uint64_t> c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coefficient(i) + b.coefficient(i)) % n;
  return Polynomial(n, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_modulus(a, b);
  const auto n = a.modulus();
  std::vector<std::uint64_t> c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coefficient(i) + n - b.coefficient(i)) % n;
  return Polynomial(n, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_modulus(a, b);
  const auto n = a.modulus();
  if (a.is_zero() || b.is_zero()) return Polynomial(n, {});
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<std::uint64_t> c(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = (c[i + j] + x[i] * y[j]) % n;
  return Polynomial(n, std::move(c));
}

Polynomial remainder(const Polynomial& a, const Polynomial& monic_divisor) {
  require_same_modulus(a, monic_divisor);
  if (!monic_divisor.is_monic()) throw Error(Errc::non_monic_modulus, "division requires a monic divisor, got " + monic_divisor.to_string());
  const auto n = a.modulus();
  const auto d = static_cast<std::size_t>(monic_divisor.degree());
  const auto& f = monic_divisor.coefficients();
  std::vector<std::uint64_t> r = a.coefficients();
  for (std::size_t top = r.size(); top-- > d;) {
    const auto lead = r[top];
    if (lead == 0) continue;
    const std::size_t shift = top - d;
    for (std::size_t i = 0; i <= d; ++i) r[shift + i] = (r[shift + i] + (n - lead) * f[i]) % n;
  }
  if (r.size() > d) r.resize(d);
  return Polynomial(n, std::move(r));
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return std::pair{q, 1U};
  unsigned s = 0;
  while (q % p == 0) {
    q /= p;
    ++s;
  }
  if (q != 1) return std::nullopt;
  return std::pair{p, s};
}

namespace {

// All monic polynomials of the given degree in lexicographic order on
// (c_0, ..., c_{degree-1}), c_0 most significant.
template <typename F>
bool for_each_monic(std::uint64_t p, unsigned degree, F&& visit) {
  std::vector<std::uint64_t> low(degree, 0);
  while (true) {
    std::vector<std::uint64_t> c = low;
    c.push_back(1);
    if (visit(Polynomial(p, std::move(c)))) return true;
    // increment with c_{degree-1} as the least significant digit
    std::size_t i = degree;
    while (i > 0) {
      --i;
      if (++low[i] < p) break;
      low[i] = 0;
      if (i == 0) return false;
    }
    if (degree == 0) return false;
  }
}

}  // namespace

bool is_irreducible(const Polynomial& f) {
  if (!is_prime(f.modulus())) throw Error(Errc::invalid_characteristic, std::to_string(f.modulus()) + " is not prime");
  if (f.degree() < 1) return false;
  const auto s = static_cast<unsigned>(f.degree());
  for (unsigned d = 1; d <= s / 2; ++d) {
    const bool divisible = for_each_monic(f.modulus(), d, [&](const Polynomial& g) { return remainder(f, g).is_zero(); });
    if (divisible) return false;
  }
  return true;
}

Polynomial find_irreducible(std::uint64_t p, unsigned s) {
  if (!is_prime(p)) throw Error(Errc::invalid_characteristic, std::to_string(p) + " is not prime");
  if (s < 1) throw Error(Errc::invalid_argument, "extension degree must be >= 1");
  std::optional<Polynomial> found;
  for_each_monic(p, s, [&](const Polynomial& f) {
    if (!is_irreducible(f)) return false;
    found = f;
    return true;
  });
  // Irreducible polynomials exist in every degree over a prime field.
  return *found;
}

}  // namespace zag
