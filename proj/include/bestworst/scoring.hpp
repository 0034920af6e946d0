#pragma once

#include <cstddef>
#include <vector>

#include "bestworst/core.hpp"

namespace bestworst {

// Expected scores under fair-lottery tie-breaking on a uniform voter continuum.
// positive_part[i] is candidate i's expected first-place mass, negative_part[i]
// the expected last-place mass before weighting, and
// per_candidate[i] = positive_part[i] - c * negative_part[i].
struct ScoreReport {
  std::vector<Rational> per_candidate;
  std::vector<Rational> positive_part;
  std::vector<Rational> negative_part;
};

ScoreReport score_all(const Rule& rule, const Profile& profile);

// v_i after candidate i alone relocates to t (everyone else fixed).
Rational deviation_payoff(const Rule& rule, const Profile& profile, std::size_t i,
                          const Rational& t);

enum class Side { Left, Right };

// lim v_i(t, x_{-i}) as t approaches `at` from one side. `at` must be an
// occupied position of the profile: either held by some other candidate, or
// candidate i's own (exclusive) platform. Approaching 0 from the left or 1 from
// the right is InvalidTarget.
Rational deviation_limit(const Rule& rule, const Profile& profile, std::size_t i,
                         const Rational& at, Side side);

struct Witness {
  enum class Kind { Point, LeftLimitAt, RightLimitAt };
  Kind kind;
  Rational at;
};

const char* to_string(Witness::Kind kind);

struct DeviationAnalysis {
  std::size_t candidate;
  Rational sup_value;
  Witness witness;
  bool attained;
};

// Exact supremum of deviation_payoff over t in [0, 1].
//
// With candidate i removed, the remaining occupied positions y^1 < ... < y^r
// split [0, 1] into gaps on which the payoff is affine in t: constant on
// interior gaps, slope (1 + c)/2 on [0, y^1) and -(1 + c)/2 on (y^r, 1]. The
// supremum is therefore the largest of the attained values at 0, 1, every y^j
// (joining that group) and every gap midpoint, and the one-sided limits at
// every y^j. Ties prefer an attained witness.
DeviationAnalysis best_deviation(const Rule& rule, const Profile& profile, std::size_t i);

}  // namespace bestworst
