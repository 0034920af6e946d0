#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bestworst/error.hpp"
#include "bestworst/rational.hpp"

namespace bestworst {

// Best-worst rule s = (c, m): +1 for a first place, -c for a last place.
class Rule {
 public:
  const Rational& c() const { return c_; }
  int m() const { return m_; }

  friend Rule validate_rule(Rational c, int m);

 private:
  Rule(Rational c, int m) : c_(std::move(c)), m_(m) {}
  Rational c_;
  int m_;
};

// Throws NegativeWeight (c < 0) or TooFewCandidates (m < 2).
Rule validate_rule(Rational c, int m);

// Closed interval [lo, hi] with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Per-candidate platforms, each in [0, 1].
class Profile {
 public:
  explicit Profile(std::vector<Rational> positions);

  std::size_t size() const { return positions_.size(); }
  const Rational& operator[](std::size_t i) const { return positions_[i]; }
  const std::vector<Rational>& positions() const { return positions_; }

  // Candidate i relocated to t; throws OutOfRange if t is outside [0, 1].
  Profile with_position(std::size_t i, const Rational& t) const;
  Profile without(std::size_t i) const;
  // x -> 1 - x for every candidate.
  Profile mirrored() const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<Rational> positions_;
};

// Throws SizeMismatch when the profile does not hold exactly rule.m() platforms.
void require_matches(const Rule& rule, const Profile& profile);

// Distinct occupied positions x^1 < ... < x^q with multiplicities and owners.
struct CanonicalProfile {
  std::vector<Rational> occupied;
  std::vector<int> counts;
  std::vector<std::vector<std::size_t>> owners;
  // slot_of[candidate] = index into occupied
  std::vector<std::size_t> slot_of;

  std::size_t q() const { return occupied.size(); }
  std::size_t m() const { return slot_of.size(); }
};

CanonicalProfile canonicalize(const Profile& profile);

// Candidates in the order recorded by the owner sets.
Profile expand(const CanonicalProfile& cp);

struct ElectorateMap {
  std::vector<Interval> full;
  std::vector<Interval> left_half;
  std::vector<Interval> right_half;
  // Voters ranking the candidates at x^1 (resp. x^q) last. Empty when q == 1,
  // since then every voter is indifferent among all positions.
  std::optional<Interval> neg_left;
  std::optional<Interval> neg_right;

  bool degenerate() const { return !neg_left.has_value(); }
};

ElectorateMap electorates(const CanonicalProfile& cp);

}  // namespace bestworst
