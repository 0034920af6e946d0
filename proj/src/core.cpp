#include "bestworst/core.hpp"

#include <algorithm>
#include <numeric>

namespace bestworst {

Rule validate_rule(Rational c, int m) {
  if (c < 0) throw Error(ErrorCode::NegativeWeight, "c = " + to_string(c));
  if (m < 2) throw Error(ErrorCode::TooFewCandidates, "m = " + std::to_string(m));
  c.canonicalize();
  return Rule(std::move(c), m);
}

namespace {

void require_unit(const Rational& x) {
  if (x < 0 || x > 1) {
    throw Error(ErrorCode::OutOfRange, "position " + to_string(x) + " outside [0,1]");
  }
}

}  // namespace

Profile::Profile(std::vector<Rational> positions) : positions_(std::move(positions)) {
  for (auto& x : positions_) {
    x.canonicalize();
    require_unit(x);
  }
}

Profile Profile::with_position(std::size_t i, const Rational& t) const {
  if (i >= size()) throw Error(ErrorCode::InvalidTarget, "candidate " + std::to_string(i));
  require_unit(t);
  auto next = positions_;
  next[i] = t;
  return Profile(std::move(next));
}

Profile Profile::without(std::size_t i) const {
  if (i >= size()) throw Error(ErrorCode::InvalidTarget, "candidate " + std::to_string(i));
  auto next = positions_;
  next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
  return Profile(std::move(next));
}

Profile Profile::mirrored() const {
  auto next = positions_;
  for (auto& x : next) x = 1 - x;
  return Profile(std::move(next));
}

void require_matches(const Rule& rule, const Profile& profile) {
  if (profile.size() != static_cast<std::size_t>(rule.m())) {
    throw Error(ErrorCode::SizeMismatch, "profile has " + std::to_string(profile.size()) +
                                             " positions, rule expects m = " +
                                             std::to_string(rule.m()));
  }
}

CanonicalProfile canonicalize(const Profile& profile) {
  const std::size_t m = profile.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return profile[a] < profile[b]; });

  CanonicalProfile cp;
  cp.slot_of.resize(m);
  for (std::size_t idx : order) {
    if (cp.occupied.empty() || cp.occupied.back() != profile[idx]) {
      cp.occupied.push_back(profile[idx]);
      cp.counts.push_back(0);
      cp.owners.emplace_back();
    }
    cp.counts.back() += 1;
    cp.owners.back().push_back(idx);
    cp.slot_of[idx] = cp.occupied.size() - 1;
  }
  return cp;
}

Profile expand(const CanonicalProfile& cp) {
  std::vector<Rational> positions(cp.m());
  for (std::size_t k = 0; k < cp.q(); ++k) {
    for (std::size_t owner : cp.owners[k]) positions[owner] = cp.occupied[k];
  }
  return Profile(std::move(positions));
}

ElectorateMap electorates(const CanonicalProfile& cp) {
  const std::size_t q = cp.q();
  ElectorateMap map;
  map.full.reserve(q);
  map.left_half.reserve(q);
  map.right_half.reserve(q);
  for (std::size_t k = 0; k < q; ++k) {
    Rational lo = k == 0 ? Rational(0) : midpoint(cp.occupied[k - 1], cp.occupied[k]);
    Rational hi = k + 1 == q ? Rational(1) : midpoint(cp.occupied[k], cp.occupied[k + 1]);
    map.left_half.push_back({lo, cp.occupied[k]});
    map.right_half.push_back({cp.occupied[k], hi});
    map.full.push_back({std::move(lo), std::move(hi)});
  }
  if (q >= 2) {
    Rational split = midpoint(cp.occupied.front(), cp.occupied.back());
    map.neg_left = Interval{split, 1};
    map.neg_right = Interval{0, split};
  }
  return map;
}

}  // namespace bestworst
