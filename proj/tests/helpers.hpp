#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "bestworst/core.hpp"

namespace bestworst::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline std::vector<Rational> xs(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(parse_rational(s));
  return out;
}

inline Profile profile(std::initializer_list<const char*> items) { return Profile(xs(items)); }

inline Rule rule(const char* c, int m) { return validate_rule(parse_rational(c), m); }

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Malformed;  // sentinel: callers expect a specific other code
}

}  // namespace bestworst::testing
