#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bestworst/core.hpp"
#include "bestworst/scoring.hpp"

namespace bestworst {

enum class Verdict { CNE, NCNE, NotEquilibrium };

const char* to_string(Verdict verdict);

struct CandidateCheck {
  Rational score;
  DeviationAnalysis deviation;
  // score - deviation.sup_value; every slack is >= 0 in an equilibrium.
  Rational slack;
};

struct ConditionCheck {
  bool holds = false;
  std::string evidence;
};

// The five-part characterisation of nonconvergent equilibria for c < 1:
//   (i)   n_i <= 2 everywhere, n_1 = n_q = 2
//   (ii)  paired non-end half-electorates, l(I_1^R) and l(I_q^L) share a length I^p
//   (iii) l(I_1^L) = l(I_q^R) = I^p + c/2
//   (iv)  unpaired full electorates >= every non-end half-electorate
//   (v)   I^p >= every non-end half-electorate
struct NcneConditionReport {
  std::array<ConditionCheck, 5> conditions;
  Rational common_half;  // I^p, read off l(I_1^R)

  bool all_hold() const {
    for (const auto& c : conditions) {
      if (!c.holds) return false;
    }
    return true;
  }
};

struct CneReport {
  std::optional<Interval> interval;  // empty when the rule admits no CNE
  Rational position;
  bool member = false;
};

struct EquilibriumCertificate {
  Verdict verdict = Verdict::NotEquilibrium;
  // Filled by the deviation route (is_nash, classify).
  std::vector<CandidateCheck> per_candidate;
  std::optional<NcneConditionReport> ncne;
  std::optional<CneReport> cne;
  // First failing candidate or condition; empty for equilibria.
  std::string violated_by;
};

// Exhaustive deviation check: equilibrium iff best_deviation(i).sup_value <= v_i
// for every candidate.
EquilibriumCertificate is_nash(const Rule& rule, const Profile& profile);

// Closed-form check of a fully convergent profile against the CNE interval.
// Throws NotConvergent when q != 1.
EquilibriumCertificate cne_check(const Rule& rule, const Profile& profile);

// Closed-form check of conditions (i)-(v). Throws WrongRegime when c >= 1 and
// NotNonconvergent when q == 1.
EquilibriumCertificate ncne_conditions(const Rule& rule, const Profile& profile);

// is_nash cross-validated against the applicable closed-form route. For q >= 2
// and c >= 1 the closed-form answer is "no NCNE". Any disagreement throws
// InternalInconsistency.
EquilibriumCertificate classify(const Rule& rule, const Profile& profile);

}  // namespace bestworst
