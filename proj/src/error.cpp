#include "zagraph/error.hpp"

namespace zag {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_order: return "invalid-order";
    case Errc::invalid_characteristic: return "invalid-characteristic";
    case Errc::non_monic_modulus: return "non-monic-modulus";
    case Errc::invalid_polynomial: return "invalid-polynomial";
    case Errc::empty_product: return "empty-product";
    case Errc::non_commutative_base: return "non-commutative-base";
    case Errc::capacity: return "capacity";
    case Errc::invalid_quotient: return "invalid-quotient";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::syntax: return "syntax";
    case Errc::semantic: return "semantic";
    case Errc::unknown_format: return "unknown-format";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace zag
