#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "lemod/cyclotomic.hpp"
#include "lemod/scenario.hpp"
#include "lemod/traces.hpp"

namespace lemod {

// Rational decomposition of one module M^j of the complex along the
// monodromy-invariant filtration  im d_{j+1}  <=  ker d_j  <=  M^j:
//   in   = im d_{j+1}                  (what flows in from level j+1)
//   h    = ker d_j / im d_{j+1}        (cohomology in degree n-j)
//   coim = M^j / ker d_j               (maps isomorphically onto im d_j)
// Each piece carries the characteristic polynomial of the induced
// monodromy, stored as a cyclotomic multiset. rank_h and cp_h are empty
// at level 0 while lambda^0 is symbolic.
struct LevelDecomposition {
  Int rank_in = 0;
  std::optional<Int> rank_h = 0;
  Int rank_coim = 0;
  CyclotomicMultiset cp_in;
  std::optional<CyclotomicMultiset> cp_h = CyclotomicMultiset{};
  CyclotomicMultiset cp_coim;

  bool operator==(const LevelDecomposition&) const = default;

  // lambda^j when every rank is concrete
  std::optional<Int> total_rank() const {
    if (!rank_h) return std::nullopt;
    return rank_in + *rank_h + rank_coim;
  }
};

// Admissible values of a symbolic lambda^0: every integer >= lower_bound
// except the listed isolated exclusions; `exact` pins lambda^0 to the
// bound itself (the swing alternative with zero bottom differential).
struct Lambda0Constraint {
  Int lower_bound = 0;
  bool exact = false;
  std::vector<Int> excluded;
  Int residual_trace = 0;  // trace carried by the top-degree cohomology piece

  bool operator==(const Lambda0Constraint&) const = default;

  bool allows(Int v) const {
    if (v < lower_bound) return false;
    if (exact) return v == lower_bound;
    return std::find(excluded.begin(), excluded.end(), v) == excluded.end();
  }
};

// One admissible structure of the whole complex. levels[j] describes M^j;
// lambda0 is present exactly when the scenario leaves lambda^0 unknown.
struct CaseProfile {
  std::vector<LevelDecomposition> levels;  // index j = 0..s
  std::optional<Lambda0Constraint> lambda0;

  bool operator==(const CaseProfile&) const = default;

  Int top_level() const { return static_cast<Int>(levels.size()) - 1; }
  bool symbolic() const { return lambda0.has_value(); }

  const LevelDecomposition& level(Int j) const {
    return levels[static_cast<size_t>(j)];
  }

  // Combined characteristic polynomial of alpha_j, when concrete.
  std::optional<CyclotomicMultiset> charpoly_multiset(Int j) const {
    const LevelDecomposition& lv = level(j);
    if (!lv.cp_h) return std::nullopt;
    CyclotomicMultiset out = lv.cp_in;
    for (const auto& [d, m] : lv.cp_h->mults) out.mults[d] += m;
    for (const auto& [d, m] : lv.cp_coim.mults) out.mults[d] += m;
    return out;
  }
};

// A rank that may depend affinely on the symbolic lambda^0.
struct AffineRank {
  bool depends_on_lambda0 = false;
  Int offset = 0;

  bool operator==(const AffineRank&) const = default;

  Int value(Int lambda0) const {
    return depends_on_lambda0 ? lambda0 + offset : offset;
  }

  std::string str() const {
    if (!depends_on_lambda0) {
      std::ostringstream out;
      out << offset;
      return out.str();
    }
    std::ostringstream out;
    out << "lambda0";
    if (offset > 0) out << "+" << offset;
    if (offset < 0) out << "-" << -offset;
    return out.str();
  }
};

// Reduced Betti numbers of the Milnor fiber forced by the profile; the
// module at level j contributes in degree n - j.
inline std::map<Int, AffineRank> betti_of_case(const CaseProfile& profile,
                                               Int n) {
  std::map<Int, AffineRank> betti;
  for (Int j = 0; j <= profile.top_level(); ++j) {
    const LevelDecomposition& lv = profile.level(j);
    AffineRank r;
    if (lv.rank_h) {
      r.offset = *lv.rank_h;
    } else {
      r.depends_on_lambda0 = true;
      r.offset = -lv.rank_in;
    }
    betti[n - j] = r;
  }
  return betti;
}

// Least lambda^0 for which the residual top-degree piece, of degree
// lambda^0 - rank_in and trace t_0 - trace(cp_in), is a product of
// cyclotomics, together with the isolated infeasible values above it.
inline Lambda0Constraint lambda0_bound_of_case(const CaseProfile& profile,
                                               const TraceVector& traces) {
  const LevelDecomposition& l0 = profile.level(0);
  const Int residual = traces[0] - l0.cp_in.trace();
  DegreeFeasibility f = feasible_degree_trace_symbolic(residual);
  Lambda0Constraint c;
  c.lower_bound = l0.rank_in + f.min_degree;
  for (Int e : f.excluded) c.excluded.push_back(l0.rank_in + e);
  c.residual_trace = residual;
  return c;
}

namespace detail {

using MultisetKey = std::vector<std::pair<Int, Int>>;

inline MultisetKey multiset_key(const CyclotomicMultiset& ms) {
  return MultisetKey(ms.mults.begin(), ms.mults.end());
}

// Deterministic output order: level ranks from the top of the complex
// down, then the cyclotomic assignments, then the lambda^0 constraint.
inline bool profile_less(const CaseProfile& a, const CaseProfile& b) {
  auto rank_key = [](const LevelDecomposition& lv) {
    return std::tuple<Int, Int, Int, Int>(
        lv.rank_in, lv.rank_h ? 0 : 1, lv.rank_h.value_or(0), lv.rank_coim);
  };
  const Int s = a.top_level();
  for (Int j = s; j >= 0; --j) {
    auto ka = rank_key(a.level(j)), kb = rank_key(b.level(j));
    if (ka != kb) return ka < kb;
  }
  auto cp_key = [](const LevelDecomposition& lv) {
    return std::tuple<Int, MultisetKey, MultisetKey>(
        lv.cp_h ? 0 : 1, lv.cp_h ? multiset_key(*lv.cp_h) : MultisetKey{},
        multiset_key(lv.cp_coim));
  };
  for (Int j = s; j >= 0; --j) {
    auto ka = cp_key(a.level(j)), kb = cp_key(b.level(j));
    if (ka != kb) return ka < kb;
  }
  auto l0_key = [](const CaseProfile& p) {
    return std::tuple<Int, Int, bool, std::vector<Int>>(
        p.lambda0 ? 1 : 0, p.lambda0 ? p.lambda0->lower_bound : 0,
        p.lambda0 ? p.lambda0->exact : false,
        p.lambda0 ? p.lambda0->excluded : std::vector<Int>{});
  };
  return l0_key(a) < l0_key(b);
}

}  // namespace detail

// Every admissible assignment of differential ranks and equivariant
// characteristic polynomials for the complex:
//   * ranks of (in, h, coim) sum to lambda^j at each concrete level,
//   * linkage: the coim piece of level j maps isomorphically and
//     equivariantly onto the in piece of level j-1,
//   * the three piece traces at level j sum to trace(alpha_j),
//   * flags prune: top_differential_nonzero forbids a zero top
//     differential; swing (s = 1) forbids a zero bottom differential
//     unless lambda^0 = 0.
// Infeasibility is the empty list. Only lambda^0 may be unknown.
inline std::vector<CaseProfile> enumerate_cases(const Scenario& sc) {
  const Int s = sc.s;
  const TraceVector traces = lm_traces(sc);
  for (Int j = 1; j <= s; ++j)
    if (!sc.le_numbers[static_cast<size_t>(j)]) {
      std::ostringstream msg;
      msg << "lambda^" << j << " unknown; only level 0 may be symbolic";
      throw Error(Errc::unsupported_symbolic, msg.str());
    }
  const bool symbolic0 = !sc.le_numbers[0].has_value();
  const bool flag_top = sc.has_flag(Flag::top_differential_nonzero);
  const bool flag_swing = sc.has_flag(Flag::swing) && s == 1;

  std::vector<CaseProfile> results;
  std::vector<LevelDecomposition> levels(static_cast<size_t>(s) + 1);

  auto emit = [&](std::optional<Lambda0Constraint> c) {
    CaseProfile p;
    p.levels = levels;
    p.lambda0 = std::move(c);
    results.push_back(std::move(p));
  };

  auto descend = [&](auto&& self, Int j, Int rank_in,
                     const CyclotomicMultiset& cp_in) -> void {
    if (j == 0) {
      if (flag_top && s == 0) return;  // d_0 = 0 always; nothing satisfies it
      const Int residual = traces[0] - cp_in.trace();
      const bool swing_zero =
          flag_swing && levels[1].rank_coim == 0;  // zero bottom differential
      LevelDecomposition lv;
      lv.rank_in = rank_in;
      lv.cp_in = cp_in;
      lv.rank_coim = 0;
      if (!symbolic0) {
        const Int lam0 = *sc.le_numbers[0];
        if (swing_zero && lam0 != 0) return;
        const Int h = lam0 - rank_in;
        if (h < 0) return;
        for (const CyclotomicMultiset& cph : enumerate_charpolys(h, residual)) {
          lv.rank_h = h;
          lv.cp_h = cph;
          levels[0] = lv;
          emit(std::nullopt);
        }
        return;
      }
      if (swing_zero) {
        // lambda^0 is pinned to 0: feasible only for an empty bottom module
        if (rank_in != 0 || residual != 0) return;
        lv.rank_h = 0;
        lv.cp_h = CyclotomicMultiset{};
        levels[0] = lv;
        Lambda0Constraint c;
        c.lower_bound = 0;
        c.exact = true;
        c.residual_trace = residual;
        emit(c);
        return;
      }
      lv.rank_h = std::nullopt;
      lv.cp_h = std::nullopt;
      levels[0] = lv;
      CaseProfile probe;
      probe.levels = levels;
      emit(lambda0_bound_of_case(probe, traces));
      return;
    }

    const Int lam = *sc.le_numbers[static_cast<size_t>(j)];
    const Int avail = lam - rank_in;
    if (avail < 0) return;
    const Int residual = traces[static_cast<size_t>(j)] - cp_in.trace();
    for (Int rank_coim = 0; rank_coim <= avail; ++rank_coim) {
      if (flag_top && j == s && rank_coim == 0) continue;
      const Int rank_h = avail - rank_coim;
      for (Int tc = -rank_coim; tc <= rank_coim; ++tc) {
        const Int th = residual - tc;
        if (th < -rank_h || th > rank_h) continue;
        for (const CyclotomicMultiset& cpc : enumerate_charpolys(rank_coim, tc))
          for (const CyclotomicMultiset& cph : enumerate_charpolys(rank_h, th)) {
            LevelDecomposition lv;
            lv.rank_in = rank_in;
            lv.cp_in = cp_in;
            lv.rank_h = rank_h;
            lv.cp_h = cph;
            lv.rank_coim = rank_coim;
            lv.cp_coim = cpc;
            levels[static_cast<size_t>(j)] = lv;
            self(self, j - 1, rank_coim, cpc);
          }
      }
    }
  };

  descend(descend, s, 0, CyclotomicMultiset{});
  std::sort(results.begin(), results.end(), detail::profile_less);
  return results;
}

}  // namespace lemod
