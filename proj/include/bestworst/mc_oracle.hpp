#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bestworst/core.hpp"

namespace bestworst {

// Sampled-voter estimate of the expected scores. Floating point lives here
// and nowhere else in the library.
struct McEstimate {
  std::vector<double> per_candidate_mean;
  std::vector<double> per_candidate_stderr;  // sample sd / sqrt(n_voters)
  std::vector<std::uint64_t> first_counts;
  std::vector<std::uint64_t> last_counts;
  std::uint64_t n_voters = 0;
  std::uint64_t seed = 0;
};

// Voters per independently seeded block. Blocks are the unit of parallel work.
inline constexpr std::uint64_t kVoterBlock = 1u << 16;

// Draws n_voters ideal points uniformly on [0, 1]. Each voter ranks the
// candidates by distance with a uniform lottery among equidistant ones; the
// first-ranked candidate scores 1 and the last-ranked -c. Voter block b uses
// derive_seed(seed, b), and only integer counts are accumulated, so the
// estimate is bit-identical for any thread count.
McEstimate sample_scores_serial(const Rule& rule, const Profile& profile, std::uint64_t n_voters,
                                std::uint64_t seed);
McEstimate sample_scores(const Rule& rule, const Profile& profile, std::uint64_t n_voters,
                         std::uint64_t seed);

struct GridDeviation {
  Rational max;
  Rational argmax;  // smallest probe attaining max
  std::size_t probes = 0;
};

// Exact deviation payoffs on {0, step, 2 step, ..., 1}, every gap midpoint
// between consecutive breakpoints {0, 1, occupied positions}, and x +- step/10
// around each occupied position x.
GridDeviation grid_best_deviation_serial(const Rule& rule, const Profile& profile, std::size_t i,
                                         const Rational& grid_step);
GridDeviation grid_best_deviation(const Rule& rule, const Profile& profile, std::size_t i,
                                  const Rational& grid_step);

}  // namespace bestworst
