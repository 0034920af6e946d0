#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bestworst/core.hpp"

namespace bestworst {

// Platforms x^1 for which ((x^1, m)) is a convergent equilibrium:
// [(m-1+c)/(m(1+c)), 1 - (m-1+c)/(m(1+c))] for c >= 1, empty for c < 1.
// With two candidates every rule is strategically plurality and the interval
// is {1/2} for all c.
std::optional<Interval> cne_interval(const Rule& rule);

// Occupied-position multiplicities n_1..n_q for a nonconvergent profile.
struct NcneConfig {
  std::vector<int> counts;

  int q() const { return static_cast<int>(counts.size()); }
};

// Throws InfeasibleConfig unless q >= 2, every n_i in {1, 2}, n_1 = n_q = 2
// and the counts sum to m.
void validate_config(const NcneConfig& config, int m);

// The configuration the constructors use by default: (2,2) for m = 4,
// (2,1,2) for m = 5, and for m >= 6 the base of the epsilon family (two
// adjacent single positions for even m, three around the median for odd m).
NcneConfig default_config(int m);

struct Construction {
  std::string family;
  Profile profile;
  std::vector<int> counts;
  Rational common_half;  // I^p
  Rational x1;
  std::optional<Rational> epsilon;
  std::optional<Rational> epsilon_max;
  // Half-electorates on one side of the median that grow with epsilon.
  std::optional<int> grown_per_side;
  // c == 1: every formula collapses to the median. The profile is the
  // limit of the family, not a nonconvergent equilibrium.
  bool limit = false;
};

// Convergent profile at 1/2 (always inside a nonempty CNE interval).
// Throws WrongRegime when the interval is empty.
Construction cne_profile(const Rule& rule);

// Unique nonconvergent equilibria for four and five candidates:
// ((x^1,2),(1-x^1,2)) with x^1 = (1+c)/4, and
// ((x^1,2),(1/2,1),(1-x^1,2)) with x^1 = (1+2c)/6.
Construction ncne_m4(const Rule& rule);
Construction ncne_m5(const Rule& rule);

// Every non-end half-electorate has length I^p = (1-c)/(2q), so
// x^1 = (1 + c(q-1))/(2q).
Construction ncne_max_dispersed(const Rule& rule, const NcneConfig& config);

// Largest admissible I^p: the epsilon family at epsilon_max (m >= 6), or the
// unique equilibrium for m in {4, 5}.
Construction ncne_min_dispersed(const Rule& rule);

// Largest epsilon for which ncne_family still satisfies (iv)-(v); I^p/(q-1)
// for both parities.
Rational family_epsilon_max(const Rule& rule);

// Starting from the equal-half-electorate profile on default_config(m), every
// half-electorate grows by epsilon except those next to the inner single
// positions, which absorb the difference. Throws EpsilonOutOfRange outside
// [0, family_epsilon_max].
Construction ncne_family(const Rule& rule, const Rational& epsilon);

}  // namespace bestworst
