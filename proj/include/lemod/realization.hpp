#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lemod/case_engine.hpp"
#include "lemod/matrix.hpp"
#include "lemod/traces.hpp"

namespace lemod {

// Explicit integer witness for a CaseProfile: module ranks, a commuting
// monodromy automorphism per level and the differentials of the complex.
// differentials[j-1] holds D_j : M^j -> M^{j-1}, of shape
// lambda^{j-1} x lambda^j.
struct ComplexRealization {
  std::vector<Int> ranks;                // lambda^j, j = 0..s
  std::vector<IntMatrix> monodromy;      // A_j, j = 0..s
  std::vector<IntMatrix> differentials;  // D_j, j = 1..s

  bool operator==(const ComplexRealization&) const = default;

  Int top_level() const { return static_cast<Int>(ranks.size()) - 1; }
};

inline IntMatrix companion_matrix(const IntPolynomial& p) {
  if (!p.monic() || p.degree() < 1)
    throw std::invalid_argument("companion_matrix: monic, degree >= 1");
  const Int m = p.degree();
  IntMatrix c(m, m);
  for (Int i = 0; i + 1 < m; ++i) c.at(i + 1, i) = 1;
  for (Int i = 0; i < m; ++i) c.at(i, m - 1) = -p.coeff(i);
  return c;
}

namespace detail {

inline IntMatrix companion_block(const CyclotomicMultiset& ms) {
  if (ms.degree() == 0) return IntMatrix(0, 0);
  return companion_matrix(expand(ms));
}

inline IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
  Int size = 0;
  for (const IntMatrix& b : blocks) size += b.rows();
  IntMatrix out(size, size);
  Int off = 0;
  for (const IntMatrix& b : blocks) {
    for (Int i = 0; i < b.rows(); ++i)
      for (Int j = 0; j < b.cols(); ++j) out.at(off + i, off + j) = b.at(i, j);
    off += b.rows();
  }
  return out;
}

}  // namespace detail

// Block witness construction. Each M^j is laid out as in | h | coim with
// companion monodromy on each piece; D_j carries the coim block of M^j by
// the identity onto the in block of M^{j-1}, which intertwines because the
// linkage invariant makes the two companion blocks equal.
inline ComplexRealization realize(const CaseProfile& profile,
                                  std::optional<Int> lambda0 = std::nullopt) {
  const Int s = profile.top_level();

  Int rank_h0;
  CyclotomicMultiset cp_h0;
  const LevelDecomposition& l0 = profile.level(0);
  if (profile.symbolic()) {
    const Lambda0Constraint& c = *profile.lambda0;
    const Int v = lambda0.value_or(c.lower_bound);
    if (!c.allows(v)) {
      std::ostringstream msg;
      msg << "lambda^0 = " << v << " violates the case constraint";
      throw Error(Errc::constraint_violation, msg.str());
    }
    rank_h0 = v - l0.rank_in;
    auto options = enumerate_charpolys(rank_h0, c.residual_trace);
    if (options.empty()) {
      std::ostringstream msg;
      msg << "no quasi-unipotent piece of degree " << rank_h0 << " and trace "
          << c.residual_trace;
      throw Error(Errc::constraint_violation, msg.str());
    }
    cp_h0 = options.front();
  } else {
    rank_h0 = *l0.rank_h;
    cp_h0 = *l0.cp_h;
    if (lambda0 && *lambda0 != l0.rank_in + rank_h0)
      throw Error(Errc::constraint_violation,
                  "lambda^0 disagrees with the concrete case");
  }

  auto pieces = [&](Int j) {
    const LevelDecomposition& lv = profile.level(j);
    Int h = j == 0 ? rank_h0 : *lv.rank_h;
    CyclotomicMultiset cph = j == 0 ? cp_h0 : *lv.cp_h;
    return std::tuple<Int, Int, Int, CyclotomicMultiset, CyclotomicMultiset,
                      CyclotomicMultiset>(lv.rank_in, h, lv.rank_coim, lv.cp_in,
                                          cph, lv.cp_coim);
  };

  ComplexRealization r;
  for (Int j = 0; j <= s; ++j) {
    auto [in, h, coim, cp_in, cp_h, cp_coim] = pieces(j);
    r.ranks.push_back(in + h + coim);
    r.monodromy.push_back(detail::block_diag({detail::companion_block(cp_in),
                                              detail::companion_block(cp_h),
                                              detail::companion_block(cp_coim)}));
  }
  for (Int j = 1; j <= s; ++j) {
    auto [in, h, coim, cp_in, cp_h, cp_coim] = pieces(j);
    IntMatrix d(r.ranks[static_cast<size_t>(j - 1)],
                r.ranks[static_cast<size_t>(j)]);
    const Int col_off = in + h;  // coim block of M^j
    for (Int i = 0; i < coim; ++i) d.at(i, col_off + i) = 1;
    r.differentials.push_back(std::move(d));
  }
  return r;
}

// Outcome of independently checking a realization. Failures are collected,
// never thrown; a mathematically invalid witness yields a nonempty list.
struct VerificationReport {
  std::vector<std::string> failures;
  std::map<Int, Int> betti;                     // degree -> rational rank
  std::map<Int, std::vector<Integer>> torsion;  // degree -> divisors > 1
  std::vector<IntPolynomial> charpolys;         // per level

  bool ok() const { return failures.empty(); }

  void fail(const std::string& check, const std::string& detail) {
    failures.push_back(check + ": " + detail);
  }
};

// Checks, independently of how the witness was built: the complex property,
// equivariance of the monodromy, unimodularity, the trace formula, rational
// cohomology ranks, cyclotomic factorization of every characteristic
// polynomial, and (via integer diagonalization) the torsion of the integral
// cohomology. When a profile is supplied, the Betti numbers must match it.
inline VerificationReport verify(const ComplexRealization& r,
                                 const Scenario& sc,
                                 const CaseProfile* expected = nullptr,
                                 std::optional<Int> lambda0 = std::nullopt) {
  VerificationReport report;
  const Int s = sc.s;

  // structural sanity first; the remaining checks need consistent shapes
  if (r.top_level() != s) {
    std::ostringstream msg;
    msg << "expected " << s + 1 << " levels, found " << r.ranks.size();
    report.fail("shape", msg.str());
    return report;
  }
  if (static_cast<Int>(r.monodromy.size()) != s + 1 ||
      static_cast<Int>(r.differentials.size()) != s) {
    report.fail("shape", "monodromy/differential count mismatch");
    return report;
  }
  for (Int j = 0; j <= s; ++j) {
    const IntMatrix& a = r.monodromy[static_cast<size_t>(j)];
    if (a.rows() != r.ranks[static_cast<size_t>(j)] || a.rows() != a.cols()) {
      std::ostringstream msg;
      msg << "monodromy at level " << j << " is not lambda^j x lambda^j";
      report.fail("shape", msg.str());
      return report;
    }
  }
  for (Int j = 1; j <= s; ++j) {
    const IntMatrix& d = r.differentials[static_cast<size_t>(j - 1)];
    if (d.rows() != r.ranks[static_cast<size_t>(j - 1)] ||
        d.cols() != r.ranks[static_cast<size_t>(j)]) {
      std::ostringstream msg;
      msg << "differential d_" << j << " has wrong shape";
      report.fail("shape", msg.str());
      return report;
    }
  }

  auto diff = [&](Int j) -> const IntMatrix& {
    return r.differentials[static_cast<size_t>(j - 1)];
  };

  for (Int j = 1; j + 1 <= s; ++j)
    if (!(diff(j) * diff(j + 1)).is_zero()) {
      std::ostringstream msg;
      msg << "d_" << j << " . d_" << j + 1 << " != 0";
      report.fail("complex", msg.str());
    }

  for (Int j = 1; j <= s; ++j)
    if (!(r.monodromy[static_cast<size_t>(j - 1)] * diff(j) ==
          diff(j) * r.monodromy[static_cast<size_t>(j)])) {
      std::ostringstream msg;
      msg << "A_" << j - 1 << " d_" << j << " != d_" << j << " A_" << j;
      report.fail("equivariance", msg.str());
    }

  const TraceVector traces = lm_traces(sc);
  for (Int j = 0; j <= s; ++j) {
    const IntMatrix& a = r.monodromy[static_cast<size_t>(j)];
    Integer deter = det(a);
    if (deter != 1 && deter != -1) {
      std::ostringstream msg;
      msg << "det A_" << j << " = " << deter;
      report.fail("determinant", msg.str());
    }
    if (a.trace() != traces[static_cast<size_t>(j)]) {
      std::ostringstream msg;
      msg << "trace A_" << j << " = " << a.trace() << ", formula gives "
          << traces[static_cast<size_t>(j)];
      report.fail("trace", msg.str());
    }
    IntPolynomial cp = charpoly(a);
    report.charpolys.push_back(cp);
    IntPolynomial rest = cp;
    for (Int d : cyclotomic_index_candidates(cp.degree())) {
      const IntPolynomial phi = cyclotomic_poly(d);
      while (rest.degree() >= phi.degree() && rest.divisible_by(phi))
        rest = rest.divide_exact(phi);
    }
    if (!(rest == IntPolynomial::one())) {
      std::ostringstream msg;
      msg << "charpoly of A_" << j << " = " << cp.str()
          << " has a non-cyclotomic factor " << rest.str();
      report.fail("quasi_unipotent", msg.str());
    }
  }

  // cohomology over Q and over Z (torsion from elementary divisors of the
  // incoming differential)
  std::vector<Int> ranks_q(static_cast<size_t>(s) + 2, 0);
  std::vector<std::vector<Integer>> divisors(static_cast<size_t>(s) + 2);
  for (Int j = 1; j <= s; ++j) {
    ranks_q[static_cast<size_t>(j)] = rank_rational(diff(j));
    divisors[static_cast<size_t>(j)] = smith_divisors(diff(j));
    if (static_cast<Int>(divisors[static_cast<size_t>(j)].size()) !=
        ranks_q[static_cast<size_t>(j)])
      report.fail("rank", "elimination and diagonalization ranks disagree");
  }
  for (Int j = 0; j <= s; ++j) {
    const Int k = sc.n - j;
    report.betti[k] = r.ranks[static_cast<size_t>(j)] -
                      ranks_q[static_cast<size_t>(j)] -
                      ranks_q[static_cast<size_t>(j + 1)];
    std::vector<Integer> tor;
    for (const Integer& d : divisors[static_cast<size_t>(j + 1)])
      if (d > 1) tor.push_back(d);
    report.torsion[k] = std::move(tor);
  }

  if (expected) {
    if (expected->top_level() != s) {
      report.fail("case", "profile has the wrong number of levels");
      return report;
    }
    Int lam0 = 0;
    if (expected->symbolic()) {
      lam0 = lambda0.value_or(expected->lambda0->lower_bound);
    } else {
      lam0 = *expected->level(0).total_rank();
    }
    for (Int j = 0; j <= s; ++j) {
      const std::optional<Int> lam = expected->level(j).total_rank();
      const Int want = lam ? *lam : lam0;
      if (r.ranks[static_cast<size_t>(j)] != want) {
        std::ostringstream msg;
        msg << "rank at level " << j << " is " << r.ranks[static_cast<size_t>(j)]
            << ", case requires " << want;
        report.fail("case_rank", msg.str());
      }
    }
    const std::map<Int, AffineRank> want_betti = betti_of_case(*expected, sc.n);
    for (const auto& [k, affine] : want_betti) {
      const Int want = affine.value(lam0);
      auto it = report.betti.find(k);
      if (it == report.betti.end() || it->second != want) {
        std::ostringstream msg;
        msg << "betti b_" << k << " is "
            << (it == report.betti.end() ? 0 : it->second)
            << ", case requires " << want;
        report.fail("betti", msg.str());
      }
    }
  }
  return report;
}

}  // namespace lemod
