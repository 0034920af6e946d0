#pragma once

// Random inputs for property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "bestworst/core.hpp"

namespace bestworst::gen {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational rational_in(std::mt19937_64& rng, int max_den, bool open = false) {
  const int den = uniform(rng, open ? 2 : 1, max_den);
  const int num = open ? uniform(rng, 1, den - 1) : uniform(rng, 0, den);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// c in [0, 1) with small denominators.
inline Rational weight_below_one(std::mt19937_64& rng) {
  const int den = uniform(rng, 1, 12);
  Rational r(uniform(rng, 0, den - 1), den);
  r.canonicalize();
  return r;
}

// Candidate 0 shares an interior position with exactly one other candidate.
inline std::vector<Rational> paired_profile(std::mt19937_64& rng) {
  const int m = uniform(rng, 2, 8);
  const Rational home = rational_in(rng, 60, /*open=*/true);
  std::vector<Rational> x{home, home};
  while (static_cast<int>(x.size()) < m) {
    Rational y = rational_in(rng, 60);
    if (y != home) x.push_back(y);
  }
  std::shuffle(x.begin() + 2, x.end(), rng);
  return x;
}

// A profile built to sit on or near the boundary of the nonconvergent
// equilibrium conditions: paired ends, random interior multiplicities, gap
// half-lengths equal to I^p next to pairs and a random fraction of it between
// two singles, ends at I^p + c/2. The result may or may not satisfy every
// condition, which is the point: both certification routes must agree.
inline std::vector<Rational> ncne_shaped(std::mt19937_64& rng, const Rational& c) {
  const int q = uniform(rng, 2, 6);
  std::vector<int> counts(static_cast<std::size_t>(q), 2);
  for (int k = 1; k + 1 < q; ++k) counts[static_cast<std::size_t>(k)] = uniform(rng, 1, 2);
  std::vector<Rational> ratio(static_cast<std::size_t>(q - 1), Rational(1));
  for (int k = 0; k + 1 < q; ++k) {
    if (counts[static_cast<std::size_t>(k)] == 1 && counts[static_cast<std::size_t>(k + 1)] == 1) {
      const int den = uniform(rng, 1, 8);
      ratio[static_cast<std::size_t>(k)] = Rational(uniform(rng, 1, den), den);
    }
  }
  Rational total = 1;
  for (const auto& r : ratio) total += r;
  const Rational ip = (1 - c) / (2 * total);
  std::vector<Rational> x;
  Rational pos = ip + c / 2;
  for (int k = 0; k < q; ++k) {
    if (k > 0) pos += 2 * ratio[static_cast<std::size_t>(k - 1)] * ip;
    for (int j = 0; j < counts[static_cast<std::size_t>(k)]; ++j) x.push_back(pos);
  }
  return x;
}

// Nudges one candidate by +-1/den, clamped to [0, 1].
inline std::vector<Rational> nudge(std::mt19937_64& rng, std::vector<Rational> x) {
  const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(x.size()) - 1));
  const Rational step(1, uniform(rng, 20, 400));
  Rational moved = uniform(rng, 0, 1) ? Rational(x[i] + step) : Rational(x[i] - step);
  x[i] = std::clamp(moved, Rational(0), Rational(1));
  return x;
}

}  // namespace bestworst::gen
