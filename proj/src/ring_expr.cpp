#include "zagraph/ring_expr.hpp"

#include "zagraph/error.hpp"

#include <cctype>
#include <initializer_list>
#include <map>

namespace zag {

RingSpec RingSpec::zmod(std::uint64_t n) { return RingSpec{Kind::zmod, n, {}, std::nullopt}; }
RingSpec RingSpec::gf(std::uint64_t q) { return RingSpec{Kind::gf, q, {}, std::nullopt}; }
RingSpec RingSpec::product(std::vector<RingSpec> factors) { return RingSpec{Kind::product, 0, std::move(factors), std::nullopt}; }
RingSpec RingSpec::matrix(std::uint64_t k, RingSpec entries) { return RingSpec{Kind::matrix, k, {std::move(entries)}, std::nullopt}; }
RingSpec RingSpec::poly_quotient(std::uint64_t n, Polynomial f) { return RingSpec{Kind::poly_quotient, n, {}, std::move(f)}; }

namespace {

constexpr std::uint64_t kMaxLiteral = 1'000'000'000'000ULL;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingSpec parse() {
    auto spec = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"'x'", "end of input"});
    return spec;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  [[noreturn]] void fail(std::initializer_list<const char*> expected) const {
    std::string msg = "offset " + std::to_string(pos_) + ": expected ";
    bool first = true;
    for (const char* e : expected) {
      if (!first) msg += " | ";
      first = false;
      msg += e;
    }
    msg += pos_ < text_.size() ? std::string(" but found '") + text_[pos_] + "'" : " but found end of input";
    throw Error(Errc::syntax, msg);
  }

  [[noreturn]] void semantic(std::size_t at, const std::string& what) const {
    throw Error(Errc::semantic, "offset " + std::to_string(at) + ": " + what);
  }

  void expect(char c, const char* name) {
    if (!peek(c)) fail({name});
    ++pos_;
  }

  std::uint64_t nat() {
    if (!peek_digit()) fail({"number"});
    const auto start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > kMaxLiteral) semantic(start, "number too large");
      ++pos_;
    }
    return v;
  }

  RingSpec expr() {
    std::vector<RingSpec> factors;
    factors.push_back(atom());
    while (peek('x')) {
      ++pos_;
      factors.push_back(atom());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return RingSpec::product(std::move(factors));
  }

  RingSpec atom() {
    skip_ws();
    const auto start = pos_;
    if (peek('Z')) {
      ++pos_;
      const auto n = nat();
      if (n < 2) semantic(start, "Z" + std::to_string(n) + ": modulus must be >= 2");
      if (!peek('[')) return RingSpec::zmod(n);
      ++pos_;
      expect('x', "'x'");
      expect(']', "']'");
      expect('/', "'/'");
      expect('(', "'('");
      const auto poly_start = pos_;
      auto f = poly(n);
      expect(')', "')'");
      if (f.degree() < 1) semantic(poly_start, "quotient modulus " + f.to_string() + " must have degree >= 1");
      if (!f.is_monic()) semantic(poly_start, "quotient modulus " + f.to_string() + " is not monic");
      return RingSpec::poly_quotient(n, std::move(f));
    }
    if (peek('G')) {
      ++pos_;
      expect('F', "'F'");
      expect('(', "'('");
      const auto q = nat();
      expect(')', "')'");
      if (!prime_power(q)) semantic(start, "GF(" + std::to_string(q) + "): order is not a prime power");
      return RingSpec::gf(q);
    }
    if (peek('M')) {
      ++pos_;
      const auto k = nat();
      if (k < 1) semantic(start, "M0: matrix size must be >= 1");
      expect('(', "'('");
      auto inner = expr();
      expect(')', "')'");
      return RingSpec::matrix(k, std::move(inner));
    }
    if (peek('(')) {
      ++pos_;
      auto inner = expr();
      expect(')', "')'");
      return inner;
    }
    fail({"'Z'", "'GF('", "'M'", "'('"});
  }

  Polynomial poly(std::uint64_t n) {
    std::map<std::size_t, std::uint64_t> terms;
    do {
      const auto [degree, c] = monomial();
      terms[degree] = (terms[degree] + c % n) % n;
    } while (peek('+') && (++pos_, true));
    std::vector<std::uint64_t> coeffs(terms.rbegin()->first + 1, 0);
    for (auto [d, c] : terms) coeffs[d] = c;
    return Polynomial(n, std::move(coeffs));
  }

  std::pair<std::size_t, std::uint64_t> monomial() {
    std::uint64_t c = 1;
    const bool has_coeff = peek_digit();
    if (has_coeff) c = nat();
    if (!peek('x')) {
      if (!has_coeff) fail({"number", "'x'"});
      return {0, c};
    }
    ++pos_;
    if (!peek('^')) return {1, c};
    ++pos_;
    const auto start = pos_;
    const auto e = nat();
    if (e > 4096) semantic(start, "exponent too large");
    return {static_cast<std::size_t>(e), c};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

std::string render(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::zmod: return "Z" + std::to_string(spec.n);
    case RingSpec::Kind::gf: return "GF(" + std::to_string(spec.n) + ")";
    case RingSpec::Kind::poly_quotient: return "Z" + std::to_string(spec.n) + "[x]/(" + spec.modulus->to_string() + ")";
    case RingSpec::Kind::matrix: return "M" + std::to_string(spec.n) + "(" + render(spec.children.front()) + ")";
    case RingSpec::Kind::product: {
      std::string s;
      for (const auto& f : spec.children) {
        if (!s.empty()) s += " x ";
        s += f.kind == RingSpec::Kind::product ? "(" + render(f) + ")" : render(f);
      }
      return s;
    }
  }
  return {};
}

namespace {

FiniteRing build(const RingSpec& spec, const RingLimits& limits) {
  switch (spec.kind) {
    case RingSpec::Kind::zmod: return make_zn(spec.n, limits);
    case RingSpec::Kind::gf: {
      const auto pp = prime_power(spec.n);
      if (!pp) throw Error(Errc::semantic, "GF(" + std::to_string(spec.n) + "): order is not a prime power");
      return make_gf(pp->first, pp->second, limits);
    }
    case RingSpec::Kind::poly_quotient: return make_poly_quotient(spec.n, *spec.modulus, limits);
    case RingSpec::Kind::matrix:
      return make_matrix_ring(elaborate(spec.children.front(), limits), static_cast<unsigned>(spec.n), limits);
    case RingSpec::Kind::product: {
      std::vector<FiniteRing> factors;
      for (const auto& f : spec.children) factors.push_back(elaborate(f, limits));
      return make_product(factors, limits);
    }
  }
  throw Error(Errc::invalid_argument, "unknown ring expression node");
}

}  // namespace

FiniteRing elaborate(const RingSpec& spec, const RingLimits& limits) {
  try {
    return build(spec, limits).relabeled(render(spec));
  } catch (const Error& e) {
    const std::string where = "in " + render(spec) + ": ";
    if (e.code() != Errc::capacity || std::string_view(e.what()).starts_with("in ")) throw;
    throw Error(e.code(), where + e.what());
  }
}

}  // namespace zag
