#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zag {

enum class Errc {
  invalid_order,
  invalid_characteristic,
  non_monic_modulus,
  invalid_polynomial,
  empty_product,
  non_commutative_base,
  capacity,
  invalid_quotient,
  budget_exceeded,
  syntax,
  semantic,
  unknown_format,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to a stable one-line prefix.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace zag
