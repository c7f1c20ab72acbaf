#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "lemod/case_engine.hpp"
#include "lemod/modp.hpp"
#include "lemod/realization.hpp"
#include "lemod/scenario.hpp"
#include "lemod/traces.hpp"

// Plain-text report rendering. Every function is deterministic: fixed
// ordering, no locale, no floating point.
namespace lemod {

inline std::string render_int_list(const std::vector<Int>& xs) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ",";
    out << xs[i];
  }
  out << "]";
  return out.str();
}

inline std::string render_le_numbers(const std::vector<LeNumber>& le) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < le.size(); ++i) {
    if (i) out << ",";
    if (le[i])
      out << *le[i];
    else
      out << "?";
  }
  out << "]";
  return out.str();
}

inline std::string render_scenario_line(const Scenario& sc) {
  std::ostringstream out;
  out << "scenario: n=" << sc.n << " s=" << sc.s
      << " link_model=" << sc.link_model.str()
      << " link_chis=" << render_int_list(sc.link_chis)
      << " le_numbers=" << render_le_numbers(sc.le_numbers) << " flags=[";
  bool first = true;
  for (Flag f : sc.flags) {
    if (!first) out << ",";
    first = false;
    out << flag_name(f);
  }
  out << "]";
  return out.str();
}

inline std::string render_traces_report(const Scenario& sc,
                                        const TraceVector& traces) {
  std::ostringstream out;
  out << render_scenario_line(sc) << "\n";
  out << "traces: " << render_int_list(traces) << "\n";
  out << "telescoping: " << (check_telescoping(traces, sc.n) ? "ok" : "violated")
      << "\n";
  if (sc.has_flag(Flag::sigma_lci))
    out << "lci_signs: "
        << (check_lci_signs(traces, sc.n, sc.s) ? "ok" : "violated") << "\n";
  return out.str();
}

// The characteristic polynomial forced when |trace| attains lambda.
inline CyclotomicMultiset extremal_multiset(Int trace, Int lambda) {
  CyclotomicMultiset ms;
  if (lambda > 0) ms.add(trace >= 0 ? 1 : 2, lambda);
  return ms;
}

inline std::string render_bounds_report(const Scenario& sc,
                                        const TraceVector& traces,
                                        const BoundsReport& bounds) {
  std::ostringstream out;
  out << render_scenario_line(sc) << "\n";
  out << "traces: " << render_int_list(traces) << "\n";
  out << "bounds:\n";
  for (size_t j = 0; j < bounds.size(); ++j) {
    out << "  lambda^" << j << " >= " << bounds[j].lower_bound;
    if (bounds[j].extremal) {
      CyclotomicMultiset forced =
          extremal_multiset(traces[j], bounds[j].lower_bound);
      out << " (extremal: char(alpha_" << j << ") = " << forced.str() << ")";
    }
    out << "\n";
  }
  return out.str();
}

inline std::string render_case_block(const CaseProfile& profile, Int n,
                                     Int index) {
  std::ostringstream out;
  out << "case " << index << ":\n";
  for (Int j = profile.top_level(); j >= 0; --j) {
    const LevelDecomposition& lv = profile.level(j);
    out << "  level " << j << ": rank_in=" << lv.rank_in << " rank_h=";
    if (lv.rank_h)
      out << *lv.rank_h;
    else
      out << AffineRank{true, -lv.rank_in}.str();
    out << " rank_coim=" << lv.rank_coim;
    if (lv.rank_in > 0) out << " cp_in=" << lv.cp_in.str();
    if (!lv.cp_h)
      out << " cp_h=?";
    else if (*lv.rank_h > 0)
      out << " cp_h=" << lv.cp_h->str();
    if (lv.rank_coim > 0) out << " cp_coim=" << lv.cp_coim.str();
    auto combined = profile.charpoly_multiset(j);
    if (combined && combined->degree() > 0)
      out << " char(alpha_" << j << ")=" << combined->str() << " : "
          << expand(*combined).str();
    out << "\n";
  }
  out << "  betti:";
  for (const auto& [k, b] : betti_of_case(profile, n))
    out << " b_" << k << "=" << b.str();
  out << "\n";
  if (profile.lambda0) {
    const Lambda0Constraint& c = *profile.lambda0;
    out << "  lambda0: " << (c.exact ? "= " : ">= ") << c.lower_bound;
    if (!c.excluded.empty()) {
      out << ", excluding {";
      for (size_t i = 0; i < c.excluded.size(); ++i) {
        if (i) out << ",";
        out << c.excluded[i];
      }
      out << "}";
    }
    out << "\n";
  }
  return out.str();
}

inline std::string render_cases_body(const std::vector<CaseProfile>& cases,
                                     Int n) {
  std::ostringstream out;
  out << "cases: " << cases.size() << "\n";
  for (size_t i = 0; i < cases.size(); ++i)
    out << render_case_block(cases[i], n, static_cast<Int>(i));
  return out.str();
}

inline std::string render_cases_report(const Scenario& sc,
                                       const TraceVector& traces,
                                       const std::vector<CaseProfile>& cases) {
  std::ostringstream out;
  out << render_scenario_line(sc) << "\n";
  out << "traces: " << render_int_list(traces) << "\n";
  out << render_cases_body(cases, sc.n);
  return out.str();
}

inline std::string render_matrix(const IntMatrix& m) { return m.str(); }

inline std::string render_realization_block(const ComplexRealization& r) {
  std::ostringstream out;
  out << "ranks: " << render_int_list(r.ranks) << "\n";
  for (Int j = 0; j <= r.top_level(); ++j)
    out << "A_" << j << " = " << r.monodromy[static_cast<size_t>(j)].str()
        << "\n";
  for (Int j = 1; j <= r.top_level(); ++j)
    out << "D_" << j << " = " << r.differentials[static_cast<size_t>(j - 1)].str()
        << "\n";
  return out.str();
}

inline std::string render_verification_block(const VerificationReport& report) {
  std::ostringstream out;
  out << "verification: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  for (const std::string& f : report.failures) out << "  failed " << f << "\n";
  out << "betti:";
  for (const auto& [k, b] : report.betti) out << " b_" << k << "=" << b;
  out << "\n";
  bool any_torsion = false;
  for (const auto& [k, divisors] : report.torsion) {
    if (divisors.empty()) continue;
    any_torsion = true;
    out << "torsion H^" << k << ":";
    for (const Integer& d : divisors) out << " Z/" << d;
    out << "\n";
  }
  if (!any_torsion) out << "torsion: none\n";
  for (size_t j = 0; j < report.charpolys.size(); ++j)
    out << "char(alpha_" << j << ") = " << report.charpolys[j].str() << "\n";
  return out.str();
}

inline std::string render_torsion_inequalities(
    const std::vector<TorsionInequality>& ineqs,
    const std::string& indent = "    ") {
  std::ostringstream out;
  // ascending degree = descending level
  for (auto it = ineqs.rbegin(); it != ineqs.rend(); ++it) {
    out << indent;
    if (it->torsion_degrees.empty()) {
      out << "0";
    } else {
      for (size_t i = 0; i < it->torsion_degrees.size(); ++i) {
        if (i) out << " + ";
        out << "t_" << it->torsion_degrees[i];
      }
    }
    out << " <= " << it->bound << "\n";
  }
  return out.str();
}

}  // namespace lemod
