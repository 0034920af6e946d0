#include "bestworst/cli.hpp"

#include <cmath>
#include <exception>
#include <sstream>

#include "bestworst/mc_oracle.hpp"

namespace bestworst::cli {

using nlohmann::json;

namespace {

Rational rational_field(const json& value, const char* what) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw Error(ErrorCode::Malformed,
              std::string(what) + " must be a \"p/q\" string or an integer");
}

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

CommandResult failure(const std::exception& e) {
  return {kExitError, "", std::string("error: ") + e.what() + "\n"};
}

}  // namespace

ProfileInput parse_profile_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Malformed, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("c") || !doc.contains("m") ||
      !doc.contains("positions")) {
    throw Error(ErrorCode::Malformed, "expected an object with keys c, m, positions");
  }
  if (!doc["m"].is_number_integer()) throw Error(ErrorCode::Malformed, "m must be an integer");
  if (!doc["positions"].is_array()) throw Error(ErrorCode::Malformed, "positions must be an array");
  Rule rule = validate_rule(rational_field(doc["c"], "c"), doc["m"].get<int>());
  std::vector<Rational> positions;
  for (const auto& p : doc["positions"]) positions.push_back(rational_field(p, "position"));
  Profile profile(std::move(positions));
  require_matches(rule, profile);
  return {std::move(rule), std::move(profile)};
}

json profile_to_json(const Rule& rule, const Profile& profile) {
  return {{"c", to_string(rule.c())}, {"m", rule.m()}, {"positions", rationals(profile.positions())}};
}

json certificate_to_json(const Rule& rule, const Profile& profile,
                         const EquilibriumCertificate& cert) {
  const CanonicalProfile cp = canonicalize(profile);
  json out = profile_to_json(rule, profile);
  out["verdict"] = to_string(cert.verdict);
  out["occupied"] = rationals(cp.occupied);
  out["counts"] = cp.counts;

  json candidates = json::array();
  if (!cert.per_candidate.empty()) {
    const ScoreReport scores = score_all(rule, profile);
    for (std::size_t i = 0; i < cert.per_candidate.size(); ++i) {
      const auto& check = cert.per_candidate[i];
      candidates.push_back({
          {"index", i},
          {"position", to_string(profile[i])},
          {"score", to_string(check.score)},
          {"positive", to_string(scores.positive_part[i])},
          {"negative", to_string(scores.negative_part[i])},
          {"sup_deviation", to_string(check.deviation.sup_value)},
          {"slack", to_string(check.slack)},
          {"witness",
           {{"kind", to_string(check.deviation.witness.kind)},
            {"at", to_string(check.deviation.witness.at)}}},
          {"attained", check.deviation.attained},
      });
    }
  }
  out["candidates"] = std::move(candidates);

  if (cert.ncne) {
    static const char* kKeys[] = {"i", "ii", "iii", "iv", "v"};
    json conditions = json::object();
    for (std::size_t k = 0; k < 5; ++k) {
      conditions[kKeys[k]] = {{"holds", cert.ncne->conditions[k].holds},
                              {"evidence", cert.ncne->conditions[k].evidence}};
    }
    conditions["Ip"] = to_string(cert.ncne->common_half);
    out["conditions"] = std::move(conditions);
  } else {
    out["conditions"] = nullptr;
  }

  if (cert.cne) {
    json cne = {{"position", to_string(cert.cne->position)}, {"member", cert.cne->member}};
    cne["interval"] = cert.cne->interval
                          ? json::array({to_string(cert.cne->interval->lo),
                                         to_string(cert.cne->interval->hi)})
                          : json(nullptr);
    out["cne"] = std::move(cne);
  } else {
    out["cne"] = nullptr;
  }
  out["violated_by"] = cert.violated_by.empty() ? json(nullptr) : json(cert.violated_by);
  return out;
}

CommandResult cmd_check(std::string_view profile_json) {
  try {
    const ProfileInput input = parse_profile_json(profile_json);
    const EquilibriumCertificate cert = classify(input.rule, input.profile);
    return {cert.verdict == Verdict::NotEquilibrium ? kExitRejected : kExitOk,
            certificate_to_json(input.rule, input.profile, cert).dump(2) + "\n", ""};
  } catch (const std::exception& e) {
    return failure(e);
  }
}

Construction build(const ConstructRequest& request) {
  const Rule rule = validate_rule(request.c, request.m);
  const std::string& family = request.family;
  if (family == "cne") return cne_profile(rule);
  if (family == "m4") return ncne_m4(rule);
  if (family == "m5") return ncne_m5(rule);
  if (family == "max_dispersed") {
    const NcneConfig config =
        request.counts ? NcneConfig{*request.counts} : default_config(rule.m());
    return ncne_max_dispersed(rule, config);
  }
  if (family == "min_dispersed") return ncne_min_dispersed(rule);
  if (family == "family") return ncne_family(rule, request.epsilon.value_or(Rational(0)));
  throw Error(ErrorCode::Malformed, "unknown family '" + family + "'");
}

CommandResult cmd_construct(const ConstructRequest& request) {
  try {
    const Construction built = build(request);
    const Rule rule = validate_rule(request.c, request.m);
    const EquilibriumCertificate cert = classify(rule, built.profile);
    json out = profile_to_json(rule, built.profile);
    out["family"] = built.family;
    out["counts"] = built.counts;
    out["x1"] = to_string(built.x1);
    out["Ip"] = to_string(built.common_half);
    out["epsilon"] = built.epsilon ? json(to_string(*built.epsilon)) : json(nullptr);
    out["epsilon_max"] = built.epsilon_max ? json(to_string(*built.epsilon_max)) : json(nullptr);
    out["J"] = built.grown_per_side ? json(*built.grown_per_side) : json(nullptr);
    out["status"] = built.limit ? "limit, not NCNE" : "equilibrium";
    if (const auto interval = cne_interval(rule); built.family == "cne" && interval) {
      out["interval"] = {to_string(interval->lo), to_string(interval->hi)};
    }
    out["certificate"] = certificate_to_json(rule, built.profile, cert);
    return {kExitOk, out.dump(2) + "\n", ""};
  } catch (const Error& e) {
    CommandResult result = failure(e);
    if (e.code() == ErrorCode::EpsilonOutOfRange || e.code() == ErrorCode::WrongRegime) {
      // Surface the feasible range alongside the diagnostic.
      json out = {{"error", to_string(e.code())}, {"message", e.what()}};
      try {
        const Rule rule = validate_rule(request.c, request.m);
        if (request.family == "family" && rule.c() <= 1) {
          out["epsilon_range"] = {"0/1", to_string(family_epsilon_max(rule))};
        }
        out["c_range"] = "c < 1 (nonconvergent), c >= 1 (convergent)";
      } catch (const std::exception&) {
      }
      result.out = out.dump(2) + "\n";
    }
    return result;
  } catch (const std::exception& e) {
    return failure(e);
  }
}

std::vector<SweepRow> sweep_rows(int m, const std::string& family,
                                 const std::vector<Rational>& c_values,
                                 const std::optional<Rational>& epsilon) {
  std::vector<SweepRow> rows(c_values.size());
  const auto n = static_cast<std::int64_t>(c_values.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < n; ++k) {
    SweepRow& row = rows[static_cast<std::size_t>(k)];
    row.c = c_values[static_cast<std::size_t>(k)];
    row.m = m;
    row.family = family;
    try {
      const Construction built = build({row.c, m, family, epsilon, std::nullopt});
      const Rule rule = validate_rule(row.c, m);
      row.positions = built.profile.positions();
      row.x1 = built.x1;
      row.common_half = built.common_half;
      row.verdict = classify(rule, built.profile).verdict;
    } catch (const Error& e) {
      row.error = to_string(e.code());
    } catch (const std::exception&) {
      row.error = "Unknown";
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepHeader << '\n';
  for (const auto& row : rows) {
    out << to_string(row.c) << ',' << row.m << ',' << row.family << ',';
    if (!row.error.empty()) {
      out << "Error:" << row.error << ",,,\n";
      continue;
    }
    out << to_string(*row.verdict) << ',' << to_string(row.x1) << ','
        << to_string(row.common_half) << ',';
    for (std::size_t k = 0; k < row.positions.size(); ++k) {
      out << (k ? ";" : "") << to_string(row.positions[k]);
    }
    out << '\n';
  }
  return out.str();
}

CommandResult cmd_sweep(int m, const std::string& family, const std::vector<Rational>& c_values,
                        const std::optional<Rational>& epsilon) {
  const auto rows = sweep_rows(m, family, c_values, epsilon);
  return {kExitOk, sweep_csv(rows), ""};
}

CommandResult cmd_mc(std::string_view profile_json, std::uint64_t n_voters, std::uint64_t seed) {
  try {
    const ProfileInput input = parse_profile_json(profile_json);
    if (n_voters < 1) throw Error(ErrorCode::OutOfRange, "n must be >= 1");
    const ScoreReport exact = score_all(input.rule, input.profile);
    const McEstimate est = sample_scores(input.rule, input.profile, n_voters, seed);
    json out = profile_to_json(input.rule, input.profile);
    out["n"] = n_voters;
    out["seed"] = seed;
    json rows = json::array();
    bool all_within = true;
    for (std::size_t i = 0; i < input.profile.size(); ++i) {
      const double exact_value = to_double(exact.per_candidate[i]);
      const double diff = est.per_candidate_mean[i] - exact_value;
      const double se = est.per_candidate_stderr[i];
      double z = 0.0;
      if (se > 0.0) {
        z = diff / se;
      } else if (diff != 0.0) {
        z = diff > 0 ? HUGE_VAL : -HUGE_VAL;
      }
      all_within = all_within && std::abs(z) <= 4.0;
      rows.push_back({{"index", i},
                      {"exact", to_string(exact.per_candidate[i])},
                      {"exact_approx", exact_value},
                      {"mean", est.per_candidate_mean[i]},
                      {"stderr", se},
                      {"z", std::isfinite(z) ? json(z) : json(z > 0 ? "inf" : "-inf")}});
    }
    out["candidates"] = std::move(rows);
    out["consistent"] = all_within;
    return {all_within ? kExitOk : kExitRejected, out.dump(2) + "\n", ""};
  } catch (const std::exception& e) {
    return failure(e);
  }
}

CommandResult cmd_grid(std::string_view profile_json, const Rational& grid_step) {
  try {
    const ProfileInput input = parse_profile_json(profile_json);
    const ScoreReport scores = score_all(input.rule, input.profile);
    json out = profile_to_json(input.rule, input.profile);
    out["grid_step"] = to_string(grid_step);
    json rows = json::array();
    bool profitable = false;
    for (std::size_t i = 0; i < input.profile.size(); ++i) {
      const GridDeviation grid = grid_best_deviation(input.rule, input.profile, i, grid_step);
      const DeviationAnalysis exact = best_deviation(input.rule, input.profile, i);
      profitable = profitable || grid.max > scores.per_candidate[i];
      rows.push_back({{"index", i},
                      {"score", to_string(scores.per_candidate[i])},
                      {"grid_max", to_string(grid.max)},
                      {"grid_argmax", to_string(grid.argmax)},
                      {"probes", grid.probes},
                      {"sup_deviation", to_string(exact.sup_value)}});
    }
    out["candidates"] = std::move(rows);
    out["grid_profitable_deviation"] = profitable;
    return {profitable ? kExitRejected : kExitOk, out.dump(2) + "\n", ""};
  } catch (const std::exception& e) {
    return failure(e);
  }
}

}  // namespace bestworst::cli
