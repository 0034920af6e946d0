#include "bestworst/construct.hpp"

#include <numeric>

namespace bestworst {

std::optional<Interval> cne_interval(const Rule& rule) {
  const Rational& c = rule.c();
  const Rational m(rule.m());
  if (rule.m() == 2) return Interval{Rational(1, 2), Rational(1, 2)};
  if (c < 1) return std::nullopt;
  Rational lo = (m - 1 + c) / (m * (1 + c));
  lo.canonicalize();
  Rational hi = 1 - lo;
  return Interval{std::move(lo), std::move(hi)};
}

void validate_config(const NcneConfig& config, int m) {
  const auto& n = config.counts;
  if (n.size() < 2) throw Error(ErrorCode::InfeasibleConfig, "need at least two positions");
  if (n.front() != 2 || n.back() != 2) {
    throw Error(ErrorCode::InfeasibleConfig, "extreme positions must hold two candidates");
  }
  for (int k : n) {
    if (k < 1 || k > 2) throw Error(ErrorCode::InfeasibleConfig, "counts must be 1 or 2");
  }
  if (std::accumulate(n.begin(), n.end(), 0) != m) {
    throw Error(ErrorCode::InfeasibleConfig, "counts do not sum to m = " + std::to_string(m));
  }
}

NcneConfig default_config(int m) {
  if (m == 4) return {{2, 2}};
  if (m == 5) return {{2, 1, 2}};
  if (m < 4) {
    throw Error(ErrorCode::InfeasibleConfig,
                "no nonconvergent equilibrium exists for m = " + std::to_string(m));
  }
  NcneConfig config;
  if (m % 2 == 0) {
    const int q = (m + 2) / 2;
    config.counts.assign(static_cast<std::size_t>(q), 2);
    const int k = q / 2 - 1;
    config.counts[static_cast<std::size_t>(k)] = 1;
    config.counts[static_cast<std::size_t>(k + 1)] = 1;
  } else {
    const int q = (m + 3) / 2;
    config.counts.assign(static_cast<std::size_t>(q), 2);
    const int k = (q - 1) / 2;
    for (int j = k - 1; j <= k + 1; ++j) config.counts[static_cast<std::size_t>(j)] = 1;
  }
  return config;
}

namespace {

// True when c == 1 (limit), throws WrongRegime when c > 1.
bool check_regime(const Rule& rule) {
  if (rule.c() > 1) {
    throw Error(ErrorCode::WrongRegime,
                "no nonconvergent equilibrium for c = " + to_string(rule.c()) + " >= 1");
  }
  return rule.c() == 1;
}

// Positions from the left end half-electorate and each gap's half-length.
Profile profile_from_halves(const Rational& left_end, const std::vector<Rational>& halves,
                            const std::vector<int>& counts) {
  std::vector<Rational> positions;
  Rational x = left_end;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k > 0) x += 2 * halves[k - 1];
    for (int j = 0; j < counts[k]; ++j) positions.push_back(x);
  }
  return Profile(std::move(positions));
}

Rational half_of(const Rational& r) {
  Rational h = r / 2;
  h.canonicalize();
  return h;
}

}  // namespace

Construction cne_profile(const Rule& rule) {
  auto interval = cne_interval(rule);
  if (!interval) {
    throw Error(ErrorCode::WrongRegime,
                "no convergent equilibrium for c = " + to_string(rule.c()) + " < 1");
  }
  std::vector<Rational> positions(static_cast<std::size_t>(rule.m()), Rational(1, 2));
  return Construction{"cne",     Profile(std::move(positions)), {rule.m()}, Rational(0),
                      Rational(1, 2), std::nullopt, std::nullopt, std::nullopt, false};
}

Construction ncne_max_dispersed(const Rule& rule, const NcneConfig& config) {
  validate_config(config, rule.m());
  const bool limit = check_regime(rule);
  const Rational q(config.q());
  Rational ip = (1 - rule.c()) / (2 * q);
  ip.canonicalize();
  Rational x1 = ip + half_of(rule.c());
  std::vector<Rational> halves(config.counts.size() - 1, ip);
  Profile profile = profile_from_halves(x1, halves, config.counts);
  return Construction{"max_dispersed", std::move(profile), config.counts, std::move(ip),
                      std::move(x1), std::nullopt, std::nullopt, std::nullopt, limit};
}

Construction ncne_m4(const Rule& rule) {
  if (rule.m() != 4) throw Error(ErrorCode::InfeasibleConfig, "ncne_m4 needs m = 4");
  Construction built = ncne_max_dispersed(rule, {{2, 2}});
  built.family = "m4";
  return built;
}

Construction ncne_m5(const Rule& rule) {
  if (rule.m() != 5) throw Error(ErrorCode::InfeasibleConfig, "ncne_m5 needs m = 5");
  Construction built = ncne_max_dispersed(rule, {{2, 1, 2}});
  built.family = "m5";
  return built;
}

Rational family_epsilon_max(const Rule& rule) {
  if (rule.m() < 6) {
    throw Error(ErrorCode::InfeasibleConfig, "the epsilon family needs m >= 6");
  }
  check_regime(rule);
  const int q = default_config(rule.m()).q();
  Rational ip = (1 - rule.c()) / (2 * Rational(q));
  Rational eps_max = ip / (q - 1);
  eps_max.canonicalize();
  return eps_max;
}

Construction ncne_family(const Rule& rule, const Rational& epsilon) {
  const Rational eps_max = family_epsilon_max(rule);
  const bool limit = check_regime(rule);
  if (epsilon < 0 || epsilon > eps_max) {
    throw Error(ErrorCode::EpsilonOutOfRange,
                "epsilon = " + to_string(epsilon) + " outside [0, " + to_string(eps_max) + "]");
  }
  const int m = rule.m();
  const NcneConfig config = default_config(m);
  const int q = config.q();
  Rational ip = (1 - rule.c()) / (2 * Rational(q));
  ip.canonicalize();
  Rational grown = ip + epsilon;
  std::vector<Rational> halves(static_cast<std::size_t>(q - 1), grown);

  int per_side = 0;
  if (m % 2 == 0) {
    // One middle gap between the two single positions absorbs the growth of
    // the other 2q - 2 half-electorates.
    per_side = q - 1;
    const auto gap = static_cast<std::size_t>(q / 2 - 1);
    halves[gap] = ip - per_side * epsilon;
  } else {
    // The two gaps next to the median share the shrinkage.
    per_side = q - 2;
    const auto k = static_cast<std::size_t>((q - 1) / 2);
    Rational shrunk = ip - per_side * epsilon / 2;
    halves[k - 1] = shrunk;
    halves[k] = shrunk;
  }
  for (auto& h : halves) h.canonicalize();
  Rational x1 = grown + half_of(rule.c());
  x1.canonicalize();
  Profile profile = profile_from_halves(x1, halves, config.counts);
  // Zero-length gaps merge positions; report the configuration that remains.
  auto counts = canonicalize(profile).counts;
  return Construction{"family", std::move(profile), std::move(counts), std::move(grown),
                      std::move(x1),   epsilon,          eps_max,       per_side,
                      limit};
}

Construction ncne_min_dispersed(const Rule& rule) {
  const int m = rule.m();
  Construction built = [&] {
    if (m == 4) return ncne_m4(rule);
    if (m == 5) return ncne_m5(rule);
    if (m < 4) {
      throw Error(ErrorCode::InfeasibleConfig,
                  "no nonconvergent equilibrium exists for m = " + std::to_string(m));
    }
    return ncne_family(rule, family_epsilon_max(rule));
  }();
  built.family = "min_dispersed";
  return built;
}

}  // namespace bestworst
