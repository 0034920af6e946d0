#include "bestworst/scoring.hpp"

#include <algorithm>
#include <optional>

namespace bestworst {

ScoreReport score_all(const Rule& rule, const Profile& profile) {
  require_matches(rule, profile);
  const std::size_t m = profile.size();
  ScoreReport report;
  report.positive_part.resize(m);
  report.negative_part.resize(m);
  report.per_candidate.resize(m);

  const CanonicalProfile cp = canonicalize(profile);
  const std::size_t q = cp.q();
  if (q == 1) {
    // Every voter is indifferent among all m candidates; a uniform random
    // ranking puts each of them first and last with probability 1/m.
    const Rational share(1, static_cast<unsigned long>(m));
    for (std::size_t j = 0; j < m; ++j) {
      report.positive_part[j] = share;
      report.negative_part[j] = share;
    }
  } else {
    const ElectorateMap em = electorates(cp);
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = cp.slot_of[j];
      const Rational n(cp.counts[k]);
      report.positive_part[j] = em.full[k].length() / n;
      if (k == 0) {
        report.negative_part[j] = em.neg_left->length() / n;
      } else if (k + 1 == q) {
        report.negative_part[j] = em.neg_right->length() / n;
      } else {
        report.negative_part[j] = 0;
      }
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    report.positive_part[j].canonicalize();
    report.negative_part[j].canonicalize();
    report.per_candidate[j] = report.positive_part[j] - rule.c() * report.negative_part[j];
  }
  return report;
}

Rational deviation_payoff(const Rule& rule, const Profile& profile, std::size_t i,
                          const Rational& t) {
  require_matches(rule, profile);
  return score_all(rule, profile.with_position(i, t)).per_candidate[i];
}

namespace {

// Closed-form one-sided limit at y[l], where y/counts describe the others.
Rational limit_at_other(const Rule& rule, const std::vector<Rational>& y, std::size_t l,
                        Side side) {
  const std::size_t r = y.size();
  Rational positive;
  Rational negative;
  if (side == Side::Left) {
    positive = l == 0 ? y[0] : Rational((y[l] - y[l - 1]) / 2);
    negative = l == 0 ? Rational(1 - midpoint(y.front(), y.back())) : Rational(0);
  } else {
    positive = l + 1 == r ? Rational(1 - y[l]) : Rational((y[l + 1] - y[l]) / 2);
    negative = l + 1 == r ? midpoint(y.front(), y.back()) : Rational(0);
  }
  Rational value = positive - rule.c() * negative;
  value.canonicalize();
  return value;
}

// Payoff of a deviator at t against the others' occupied positions y with
// multiplicities n. Same geometry as score_all, without rebuilding the profile.
Rational payoff_among(const Rule& rule, const std::vector<Rational>& y, const std::vector<int>& n,
                      const Rational& t) {
  const std::size_t r = y.size();
  const auto it = std::lower_bound(y.begin(), y.end(), t);
  const auto l = static_cast<std::size_t>(it - y.begin());
  Rational positive;
  Rational negative;
  if (it != y.end() && *it == t) {
    const int group = n[l] + 1;
    const Rational lo = l == 0 ? Rational(0) : midpoint(y[l - 1], y[l]);
    const Rational hi = l + 1 == r ? Rational(1) : midpoint(y[l], y[l + 1]);
    positive = (hi - lo) / group;
    if (r == 1) {
      negative = Rational(1, group);
    } else if (l == 0) {
      negative = (1 - midpoint(y.front(), y.back())) / group;
    } else if (l + 1 == r) {
      negative = midpoint(y.front(), y.back()) / group;
    }
  } else {
    const Rational lo = l == 0 ? Rational(0) : midpoint(y[l - 1], t);
    const Rational hi = l == r ? Rational(1) : midpoint(t, y[l]);
    positive = hi - lo;
    if (l == 0) {
      negative = 1 - midpoint(t, y.back());
    } else if (l == r) {
      negative = midpoint(y.front(), t);
    }
  }
  Rational value = positive - rule.c() * negative;
  value.canonicalize();
  return value;
}

void require_approachable(const Rational& at, Side side) {
  if ((side == Side::Left && at == 0) || (side == Side::Right && at == 1)) {
    throw Error(ErrorCode::InvalidTarget,
                to_string(at) + " cannot be approached from the " +
                    (side == Side::Left ? "left" : "right"));
  }
}

}  // namespace

Rational deviation_limit(const Rule& rule, const Profile& profile, std::size_t i,
                         const Rational& at, Side side) {
  require_matches(rule, profile);
  if (i >= profile.size()) throw Error(ErrorCode::InvalidTarget, "candidate " + std::to_string(i));
  require_approachable(at, side);

  const CanonicalProfile others = canonicalize(profile.without(i));
  const auto& y = others.occupied;
  auto it = std::lower_bound(y.begin(), y.end(), at);
  if (it != y.end() && *it == at) {
    return limit_at_other(rule, y, static_cast<std::size_t>(it - y.begin()), side);
  }
  if (at == profile[i]) {
    // Alone at `at`: the payoff is continuous there.
    return deviation_payoff(rule, profile, i, at);
  }
  throw Error(ErrorCode::InvalidTarget, to_string(at) + " is not an occupied position");
}

const char* to_string(Witness::Kind kind) {
  switch (kind) {
    case Witness::Kind::Point: return "Point";
    case Witness::Kind::LeftLimitAt: return "LeftLimitAt";
    case Witness::Kind::RightLimitAt: return "RightLimitAt";
  }
  return "Unknown";
}

DeviationAnalysis best_deviation(const Rule& rule, const Profile& profile, std::size_t i) {
  require_matches(rule, profile);
  if (i >= profile.size()) throw Error(ErrorCode::InvalidTarget, "candidate " + std::to_string(i));

  const CanonicalProfile others = canonicalize(profile.without(i));
  const auto& y = others.occupied;

  std::vector<Rational> breakpoints;
  breakpoints.reserve(y.size() + 2);
  breakpoints.emplace_back(0);
  for (const auto& v : y) {
    if (v != breakpoints.back()) breakpoints.push_back(v);
  }
  if (breakpoints.back() != 1) breakpoints.emplace_back(1);

  std::optional<DeviationAnalysis> best;
  auto offer = [&](Rational value, Witness witness, bool attained) {
    if (!best || value > best->sup_value || (value == best->sup_value && attained && !best->attained)) {
      best = DeviationAnalysis{i, std::move(value), std::move(witness), attained};
    }
  };

  for (const auto& t : breakpoints) {
    offer(payoff_among(rule, y, others.counts, t), {Witness::Kind::Point, t}, true);
  }
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    Rational t = midpoint(breakpoints[k], breakpoints[k + 1]);
    offer(payoff_among(rule, y, others.counts, t), {Witness::Kind::Point, t}, true);
  }
  for (std::size_t l = 0; l < y.size(); ++l) {
    if (y[l] > 0) {
      offer(limit_at_other(rule, y, l, Side::Left), {Witness::Kind::LeftLimitAt, y[l]}, false);
    }
    if (y[l] < 1) {
      offer(limit_at_other(rule, y, l, Side::Right), {Witness::Kind::RightLimitAt, y[l]}, false);
    }
  }
  return *best;
}

}  // namespace bestworst
