#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bestworst/construct.hpp"
#include "bestworst/equilibrium.hpp"

namespace bestworst::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;  // NotEquilibrium, or an MC z-score above 4
inline constexpr int kExitError = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

struct ProfileInput {
  Rule rule;
  Profile profile;
};

// {"c": "p/q", "m": int, "positions": ["p/q", ...]}. Throws Error(Malformed)
// on schema violations and the usual validation errors otherwise.
ProfileInput parse_profile_json(std::string_view text);
nlohmann::json profile_to_json(const Rule& rule, const Profile& profile);

nlohmann::json certificate_to_json(const Rule& rule, const Profile& profile,
                                   const EquilibriumCertificate& cert);

CommandResult cmd_check(std::string_view profile_json);

struct ConstructRequest {
  Rational c;
  int m = 0;
  std::string family;  // cne, m4, m5, max_dispersed, min_dispersed, family
  std::optional<Rational> epsilon;
  std::optional<std::vector<int>> counts;
};

// Dispatch to the named constructor. Throws on invalid requests.
Construction build(const ConstructRequest& request);

CommandResult cmd_construct(const ConstructRequest& request);

struct SweepRow {
  Rational c;
  int m = 0;
  std::string family;
  std::vector<Rational> positions;
  std::optional<Verdict> verdict;  // recomputed by classify, never taken from the constructor
  Rational x1;
  Rational common_half;
  std::string error;  // error kind when the row could not be built
};

inline constexpr std::string_view kSweepHeader = "c,m,family,verdict,x1,Ip,positions";

// Rows in input order; rows are computed in parallel.
std::vector<SweepRow> sweep_rows(int m, const std::string& family,
                                 const std::vector<Rational>& c_values,
                                 const std::optional<Rational>& epsilon = std::nullopt);
std::string sweep_csv(const std::vector<SweepRow>& rows);

CommandResult cmd_sweep(int m, const std::string& family, const std::vector<Rational>& c_values,
                        const std::optional<Rational>& epsilon = std::nullopt);

CommandResult cmd_mc(std::string_view profile_json, std::uint64_t n_voters, std::uint64_t seed);

// Deviation search on a grid, reported next to the exact supremum.
CommandResult cmd_grid(std::string_view profile_json, const Rational& grid_step);

}  // namespace bestworst::cli
