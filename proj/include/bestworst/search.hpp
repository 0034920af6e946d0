#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "bestworst/equilibrium.hpp"

namespace bestworst {

// Random profiles: m uniform in [m_min, m_max], q distinct positions uniform in
// [q_min, min(q_max, m)], each position a/d with 1 <= d <= max_den.
struct ProfileSampler {
  int m_min = 3;
  int m_max = 8;
  int q_min = 2;
  int q_max = 5;
  int max_den = 60;

  Profile operator()(std::mt19937_64& rng) const;
};

struct SearchSpec {
  Rational c;
  ProfileSampler sampler;
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

struct SearchHit {
  std::size_t index;
  Profile profile;
  Verdict verdict;
};

struct SearchTally {
  std::size_t profiles = 0;
  std::size_t cne = 0;
  std::size_t ncne = 0;
  std::size_t not_equilibrium = 0;
  std::size_t m3_ncne = 0;
  std::size_t ncne_q1 = 0;  // always zero unless the classifier is broken
  std::size_t cne_multi = 0;  // CNE verdicts with q >= 2 (must stay zero)
  // Every equilibrium found, ordered by profile index.
  std::vector<SearchHit> equilibria;
};

// Profile k is drawn from a generator seeded with derive_seed(seed, k) and
// run through classify, so both versions return identical tallies.
SearchTally search_serial(const SearchSpec& spec);
SearchTally search(const SearchSpec& spec);

}  // namespace bestworst
