#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bestworst {

// Exact rational backed by GMP. Always kept in canonical form.
using Rational = mpq_class;

// Parses "p/q" or "p". Throws Error{ErrorCode::Malformed} on anything else.
Rational parse_rational(std::string_view text);

// Always "p/q", including integers ("2/1") and zero ("0/1").
std::string to_string(const Rational& r);

double to_double(const Rational& r);

inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

}  // namespace bestworst
