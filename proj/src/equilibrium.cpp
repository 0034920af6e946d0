#include "bestworst/equilibrium.hpp"

#include <sstream>

#include "bestworst/construct.hpp"

namespace bestworst {

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::CNE: return "CNE";
    case Verdict::NCNE: return "NCNE";
    case Verdict::NotEquilibrium: return "NotEquilibrium";
  }
  return "Unknown";
}

EquilibriumCertificate is_nash(const Rule& rule, const Profile& profile) {
  require_matches(rule, profile);
  const ScoreReport scores = score_all(rule, profile);
  EquilibriumCertificate cert;
  cert.per_candidate.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    DeviationAnalysis dev = best_deviation(rule, profile, i);
    Rational slack = scores.per_candidate[i] - dev.sup_value;
    if (slack < 0 && cert.violated_by.empty()) {
      cert.violated_by = "candidate " + std::to_string(i) + ": " + to_string(dev.witness.kind) +
                         "(" + to_string(dev.witness.at) + ") yields " +
                         to_string(dev.sup_value) + " > " + to_string(scores.per_candidate[i]);
    }
    cert.per_candidate.push_back({scores.per_candidate[i], std::move(dev), std::move(slack)});
  }
  if (!cert.violated_by.empty()) {
    cert.verdict = Verdict::NotEquilibrium;
  } else {
    cert.verdict = canonicalize(profile).q() == 1 ? Verdict::CNE : Verdict::NCNE;
  }
  return cert;
}

EquilibriumCertificate cne_check(const Rule& rule, const Profile& profile) {
  require_matches(rule, profile);
  const CanonicalProfile cp = canonicalize(profile);
  if (cp.q() != 1) {
    throw Error(ErrorCode::NotConvergent, std::to_string(cp.q()) + " occupied positions");
  }
  CneReport report;
  report.interval = cne_interval(rule);
  report.position = cp.occupied.front();
  report.member = report.interval && report.interval->contains(report.position);

  EquilibriumCertificate cert;
  if (report.member) {
    cert.verdict = Verdict::CNE;
  } else {
    cert.verdict = Verdict::NotEquilibrium;
    cert.violated_by = report.interval
                           ? "x^1 = " + to_string(report.position) + " outside [" +
                                 to_string(report.interval->lo) + ", " +
                                 to_string(report.interval->hi) + "]"
                           : "c = " + to_string(rule.c()) + " < 1 admits no CNE";
  }
  cert.cne = std::move(report);
  return cert;
}

namespace {

std::string counts_text(const std::vector<int>& counts) {
  std::ostringstream out;
  out << "n = (";
  for (std::size_t k = 0; k < counts.size(); ++k) out << (k ? "," : "") << counts[k];
  out << ")";
  return out.str();
}

}  // namespace

EquilibriumCertificate ncne_conditions(const Rule& rule, const Profile& profile) {
  require_matches(rule, profile);
  if (rule.c() >= 1) {
    throw Error(ErrorCode::WrongRegime, "the characterisation assumes c < 1, got c = " +
                                            to_string(rule.c()));
  }
  const CanonicalProfile cp = canonicalize(profile);
  const std::size_t q = cp.q();
  if (q < 2) throw Error(ErrorCode::NotNonconvergent, "profile is fully convergent");
  const ElectorateMap em = electorates(cp);
  const auto& n = cp.counts;
  const std::size_t last = q - 1;

  NcneConditionReport report;
  report.common_half = em.right_half.front().length();
  const Rational& ip = report.common_half;

  // (i)
  {
    bool holds = n.front() == 2 && n.back() == 2;
    for (int k : n) holds = holds && k <= 2;
    report.conditions[0] = {holds, counts_text(n)};
  }
  // (ii)
  {
    ConditionCheck check{true, "I^p = l(I_1^R) = " + to_string(ip)};
    if (em.left_half[last].length() != ip) {
      check = {false, "l(I_q^L) = " + to_string(em.left_half[last].length()) +
                          " != I^p = " + to_string(ip)};
    }
    for (std::size_t k = 1; check.holds && k < last; ++k) {
      if (n[k] != 2) continue;
      const Rational l = em.left_half[k].length();
      const Rational r = em.right_half[k].length();
      if (l != ip || r != ip) {
        check = {false, "paired position " + std::to_string(k + 1) + ": l(I^L) = " +
                            to_string(l) + ", l(I^R) = " + to_string(r) +
                            ", I^p = " + to_string(ip)};
      }
    }
    report.conditions[1] = std::move(check);
  }
  // (iii)
  {
    const Rational target = ip + rule.c() / 2;
    const Rational left = em.left_half.front().length();
    const Rational right = em.right_half.back().length();
    report.conditions[2] = {left == target && right == target,
                            "l(I_1^L) = " + to_string(left) + ", l(I_q^R) = " +
                                to_string(right) + ", I^p + c/2 = " + to_string(Rational(target))};
  }
  // Largest half-electorate other than the two end ones.
  Rational widest = em.right_half.front().length();
  for (std::size_t k = 1; k < q; ++k) widest = std::max(widest, em.left_half[k].length());
  for (std::size_t k = 0; k < last; ++k) widest = std::max(widest, em.right_half[k].length());
  // (iv)
  {
    ConditionCheck check{true, "widest non-end half-electorate = " + to_string(widest)};
    for (std::size_t k = 0; k < q; ++k) {
      if (n[k] != 1) continue;
      const Rational full = em.full[k].length();
      if (full < widest) {
        check = {false, "unpaired position " + std::to_string(k + 1) + ": l(I) = " +
                            to_string(full) + " < " + to_string(widest)};
        break;
      }
    }
    report.conditions[3] = std::move(check);
  }
  // (v)
  report.conditions[4] = {ip >= widest, "I^p = " + to_string(ip) +
                                            ", widest non-end half-electorate = " +
                                            to_string(widest)};

  EquilibriumCertificate cert;
  static const char* kNames[] = {"(i)", "(ii)", "(iii)", "(iv)", "(v)"};
  for (std::size_t k = 0; k < report.conditions.size(); ++k) {
    if (!report.conditions[k].holds) {
      cert.violated_by = std::string("condition ") + kNames[k] + ": " +
                         report.conditions[k].evidence;
      break;
    }
  }
  cert.verdict = cert.violated_by.empty() ? Verdict::NCNE : Verdict::NotEquilibrium;
  cert.ncne = std::move(report);
  return cert;
}

EquilibriumCertificate classify(const Rule& rule, const Profile& profile) {
  EquilibriumCertificate cert = is_nash(rule, profile);
  const std::size_t q = canonicalize(profile).q();

  Verdict closed_form = Verdict::NotEquilibrium;
  std::string route;
  if (q == 1) {
    EquilibriumCertificate other = cne_check(rule, profile);
    closed_form = other.verdict;
    cert.cne = std::move(other.cne);
    route = "CNE interval";
  } else if (rule.c() < 1) {
    EquilibriumCertificate other = ncne_conditions(rule, profile);
    closed_form = other.verdict;
    cert.ncne = std::move(other.ncne);
    route = "NCNE conditions";
  } else {
    route = "no NCNE for c >= 1";
  }
  if (closed_form != cert.verdict) {
    throw Error(ErrorCode::InternalInconsistency,
                std::string("deviation analysis says ") + to_string(cert.verdict) + ", " +
                    route + " says " + to_string(closed_form));
  }
  return cert;
}

}  // namespace bestworst
