#pragma once

#include "zagraph/error.hpp"
#include "zagraph/ring_expr.hpp"

#include <doctest.h>

#include <string>
#include <vector>

namespace zag::test {

inline FiniteRing ring(std::string_view expr) { return elaborate(parse_ring_expr(expr)); }

inline std::vector<std::size_t> members(const ElementSet& s) { return s.members(); }

// Element index by display label; fails the test if absent.
inline Element element(const FiniteRing& r, std::string_view label) {
  for (Element x = 0; x < r.order(); ++x)
    if (r.element_label(x) == label) return x;
  FAIL("no element labelled " << label << " in " << r.label());
  return 0;
}

inline ElementSet set_of(const FiniteRing& r, std::initializer_list<std::size_t> xs) { return ElementSet(r.order(), xs); }

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::invalid_argument;
}

}  // namespace zag::test
