#include "bestworst/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bestworst/scoring.hpp"
#include "bestworst/seeding.hpp"

namespace bestworst {

namespace {

struct Counts {
  std::vector<std::uint64_t> first;
  std::vector<std::uint64_t> last;
};

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t pick(std::mt19937_64& rng, std::size_t k) {
  return static_cast<std::size_t>(rng() % k);
}

// Voters [begin, end) of block `block`.
void sample_block(const std::vector<double>& x, std::uint64_t seed, std::uint64_t block,
                  std::uint64_t voters, Counts& counts) {
  std::mt19937_64 rng(derive_seed(seed, block));
  const std::size_t m = x.size();
  std::vector<double> dist(m);
  std::vector<std::size_t> nearest;
  std::vector<std::size_t> farthest;
  nearest.reserve(m);
  farthest.reserve(m);

  for (std::uint64_t v = 0; v < voters; ++v) {
    const double y = unit_draw(rng);
    double lo = 2.0;
    double hi = -1.0;
    for (std::size_t j = 0; j < m; ++j) {
      dist[j] = std::abs(y - x[j]);
      lo = std::min(lo, dist[j]);
      hi = std::max(hi, dist[j]);
    }
    nearest.clear();
    farthest.clear();
    for (std::size_t j = 0; j < m; ++j) {
      if (dist[j] == lo) nearest.push_back(j);
      if (dist[j] == hi) farthest.push_back(j);
    }
    const std::size_t first = nearest[pick(rng, nearest.size())];
    std::size_t last;
    if (lo == hi) {
      // One tie group: the last place is drawn from the rest of the lottery.
      last = pick(rng, m - 1);
      if (last >= first) ++last;
    } else {
      last = farthest[pick(rng, farthest.size())];
    }
    counts.first[first] += 1;
    counts.last[last] += 1;
  }
}

McEstimate summarize(const Rule& rule, Counts counts, std::uint64_t n, std::uint64_t seed) {
  const std::size_t m = counts.first.size();
  const double c = to_double(rule.c());
  McEstimate est;
  est.n_voters = n;
  est.seed = seed;
  est.per_candidate_mean.resize(m);
  est.per_candidate_stderr.resize(m);
  const double nd = static_cast<double>(n);
  for (std::size_t j = 0; j < m; ++j) {
    const double f = static_cast<double>(counts.first[j]);
    const double l = static_cast<double>(counts.last[j]);
    const double mean = (f - c * l) / nd;
    const double sumsq = f + c * c * l;
    double var = n > 1 ? (sumsq - nd * mean * mean) / (nd - 1) : 0.0;
    var = std::max(var, 0.0);
    est.per_candidate_mean[j] = mean;
    est.per_candidate_stderr[j] = std::sqrt(var) / std::sqrt(nd);
  }
  est.first_counts = std::move(counts.first);
  est.last_counts = std::move(counts.last);
  return est;
}

std::vector<double> as_doubles(const Rule& rule, const Profile& profile, std::uint64_t n) {
  require_matches(rule, profile);
  if (n == 0) throw Error(ErrorCode::OutOfRange, "n_voters must be >= 1");
  std::vector<double> x;
  for (const auto& p : profile.positions()) x.push_back(to_double(p));
  return x;
}

std::uint64_t block_size(std::uint64_t n, std::uint64_t block) {
  return std::min(kVoterBlock, n - block * kVoterBlock);
}

}  // namespace

McEstimate sample_scores_serial(const Rule& rule, const Profile& profile, std::uint64_t n_voters,
                                std::uint64_t seed) {
  const auto x = as_doubles(rule, profile, n_voters);
  Counts counts{std::vector<std::uint64_t>(x.size()), std::vector<std::uint64_t>(x.size())};
  const std::uint64_t blocks = (n_voters + kVoterBlock - 1) / kVoterBlock;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    sample_block(x, seed, b, block_size(n_voters, b), counts);
  }
  return summarize(rule, std::move(counts), n_voters, seed);
}

McEstimate sample_scores(const Rule& rule, const Profile& profile, std::uint64_t n_voters,
                         std::uint64_t seed) {
  const auto x = as_doubles(rule, profile, n_voters);
  const std::size_t m = x.size();
  Counts total{std::vector<std::uint64_t>(m), std::vector<std::uint64_t>(m)};
  const auto blocks = static_cast<std::int64_t>((n_voters + kVoterBlock - 1) / kVoterBlock);
#pragma omp parallel
  {
    Counts local{std::vector<std::uint64_t>(m), std::vector<std::uint64_t>(m)};
#pragma omp for schedule(static) nowait
    for (std::int64_t b = 0; b < blocks; ++b) {
      const auto ub = static_cast<std::uint64_t>(b);
      sample_block(x, seed, ub, block_size(n_voters, ub), local);
    }
#pragma omp critical(mc_merge)
    for (std::size_t j = 0; j < m; ++j) {
      total.first[j] += local.first[j];
      total.last[j] += local.last[j];
    }
  }
  return summarize(rule, std::move(total), n_voters, seed);
}

namespace {

std::vector<Rational> grid_probes(const Profile& profile, const Rational& step) {
  if (step <= 0) throw Error(ErrorCode::OutOfRange, "grid_step must be positive");
  std::vector<Rational> probes;
  for (Rational t = 0; t < 1; t += step) probes.push_back(t);
  probes.emplace_back(1);

  std::vector<Rational> breakpoints = profile.positions();
  breakpoints.emplace_back(0);
  breakpoints.emplace_back(1);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    probes.push_back(midpoint(breakpoints[k], breakpoints[k + 1]));
  }
  const Rational offset = step / 10;
  for (const auto& x : profile.positions()) {
    if (x - offset >= 0) probes.push_back(x - offset);
    if (x + offset <= 1) probes.push_back(x + offset);
  }
  for (auto& p : probes) p.canonicalize();
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  return probes;
}

GridDeviation best_of(const std::vector<Rational>& probes, const std::vector<Rational>& values) {
  GridDeviation out;
  out.probes = probes.size();
  std::size_t arg = 0;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] > values[arg]) arg = k;
  }
  out.max = values[arg];
  out.argmax = probes[arg];
  return out;
}

}  // namespace

GridDeviation grid_best_deviation_serial(const Rule& rule, const Profile& profile, std::size_t i,
                                         const Rational& grid_step) {
  const auto probes = grid_probes(profile, grid_step);
  std::vector<Rational> values(probes.size());
  for (std::size_t k = 0; k < probes.size(); ++k) {
    values[k] = deviation_payoff(rule, profile, i, probes[k]);
  }
  return best_of(probes, values);
}

GridDeviation grid_best_deviation(const Rule& rule, const Profile& profile, std::size_t i,
                                  const Rational& grid_step) {
  require_matches(rule, profile);
  if (i >= profile.size()) throw Error(ErrorCode::InvalidTarget, "candidate " + std::to_string(i));
  const auto probes = grid_probes(profile, grid_step);
  std::vector<Rational> values(probes.size());
  const auto n = static_cast<std::int64_t>(probes.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    values[uk] = deviation_payoff(rule, profile, i, probes[uk]);
  }
  return best_of(probes, values);
}

}  // namespace bestworst
