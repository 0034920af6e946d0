#include "bestworst/search.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "bestworst/seeding.hpp"

namespace bestworst {

Profile ProfileSampler::operator()(std::mt19937_64& rng) const {
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int m = uniform(m_min, m_max);
  const int q = uniform(q_min, std::min(q_max, m));

  std::set<Rational> chosen;
  while (static_cast<int>(chosen.size()) < q) {
    const int den = uniform(1, max_den);
    chosen.insert(Rational(uniform(0, den), den));
  }
  std::vector<int> counts(static_cast<std::size_t>(q), 1);
  for (int extra = m - q; extra > 0; --extra) counts[static_cast<std::size_t>(uniform(0, q - 1))] += 1;

  std::vector<Rational> positions;
  std::size_t k = 0;
  for (const auto& x : chosen) {
    Rational canon = x;
    canon.canonicalize();
    for (int j = 0; j < counts[k]; ++j) positions.push_back(canon);
    ++k;
  }
  std::shuffle(positions.begin(), positions.end(), rng);
  return Profile(std::move(positions));
}

namespace {

void tally_one(const SearchSpec& spec, std::size_t index, SearchTally& tally) {
  std::mt19937_64 rng(derive_seed(spec.seed, index));
  Profile profile = spec.sampler(rng);
  const Rule rule = validate_rule(spec.c, static_cast<int>(profile.size()));
  const Verdict verdict = classify(rule, profile).verdict;
  const std::size_t q = canonicalize(profile).q();
  tally.profiles += 1;
  switch (verdict) {
    case Verdict::CNE:
      tally.cne += 1;
      if (q >= 2) tally.cne_multi += 1;
      break;
    case Verdict::NCNE:
      tally.ncne += 1;
      if (profile.size() == 3) tally.m3_ncne += 1;
      if (q == 1) tally.ncne_q1 += 1;
      break;
    case Verdict::NotEquilibrium:
      tally.not_equilibrium += 1;
      break;
  }
  if (verdict != Verdict::NotEquilibrium) {
    tally.equilibria.push_back({index, std::move(profile), verdict});
  }
}

void merge_into(SearchTally& total, SearchTally&& part) {
  total.profiles += part.profiles;
  total.cne += part.cne;
  total.ncne += part.ncne;
  total.not_equilibrium += part.not_equilibrium;
  total.m3_ncne += part.m3_ncne;
  total.ncne_q1 += part.ncne_q1;
  total.cne_multi += part.cne_multi;
  for (auto& hit : part.equilibria) total.equilibria.push_back(std::move(hit));
}

}  // namespace

SearchTally search_serial(const SearchSpec& spec) {
  SearchTally tally;
  for (std::size_t k = 0; k < spec.count; ++k) tally_one(spec, k, tally);
  return tally;
}

SearchTally search(const SearchSpec& spec) {
  SearchTally total;
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(spec.count);
#pragma omp parallel
  {
    SearchTally local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t k = 0; k < count; ++k) {
      // Exceptions must not cross the parallel region.
      try {
        tally_one(spec, static_cast<std::size_t>(k), local);
      } catch (...) {
#pragma omp critical(search_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(search_merge)
    merge_into(total, std::move(local));
  }
  if (failure) std::rethrow_exception(failure);
  std::sort(total.equilibria.begin(), total.equilibria.end(),
            [](const SearchHit& a, const SearchHit& b) { return a.index < b.index; });
  return total;
}

}  // namespace bestworst
