#pragma once

#include <cstdlib>
#include <vector>

#include "lemod/scenario.hpp"

namespace lemod {

// trace(alpha_0), ..., trace(alpha_s).
using TraceVector = std::vector<Int>;

inline Int sign_pow(Int e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

// Traces of the monodromy automorphisms from link data alone:
//   trace(alpha_j) = (-1)^{n-j} (chi(L^{s-j-1}) - chi(L^{s-j})),
// with chi(L^{-1}) = 0. Depends on no Le number.
inline TraceVector lm_traces(const Scenario& sc) {
  TraceVector traces(static_cast<size_t>(sc.s) + 1);
  auto chi = [&](Int k) -> Int {
    return k < 0 ? 0 : sc.link_chis[static_cast<size_t>(k)];
  };
  for (Int j = 0; j <= sc.s; ++j)
    traces[static_cast<size_t>(j)] =
        sign_pow(sc.n - j) * (chi(sc.s - j - 1) - chi(sc.s - j));
  return traces;
}

// With trace(alpha_j) sitting in degree n-j, the alternating sum telescopes
// to -chi(L^s) = -1; equivalently (-1)^n times the sum is (-1)^{n+1}, the
// Lefschetz number of the shifted vanishing-cycle monodromy.
inline bool check_telescoping(const TraceVector& traces, Int n) {
  Int sum = 0;
  for (size_t j = 0; j < traces.size(); ++j)
    sum += sign_pow(n - static_cast<Int>(j)) * traces[j];
  return sum == -1;
}

struct LevelBound {
  Int lower_bound = 0;   // |trace(alpha_j)| <= lambda^j
  bool extremal = false; // lambda^j known and equal to the bound: the
                         // characteristic polynomial is forced to (t -+ 1)^lambda
};

using BoundsReport = std::vector<LevelBound>;

inline BoundsReport lambda_lower_bounds(
    const TraceVector& traces, const std::vector<LeNumber>& le_numbers = {}) {
  BoundsReport report(traces.size());
  for (size_t j = 0; j < traces.size(); ++j) {
    report[j].lower_bound = traces[j] < 0 ? -traces[j] : traces[j];
    if (j < le_numbers.size() && le_numbers[j])
      report[j].extremal = (*le_numbers[j] == report[j].lower_bound);
  }
  return report;
}

// When the critical locus is a set-theoretic local complete intersection
// (asserted by the sigma_lci flag), every trace is 0 or has the sign of
// (-1)^{n-s-1}.
inline bool check_lci_signs(const TraceVector& traces, Int n, Int s) {
  const Int sign = sign_pow(n - s - 1);
  for (Int t : traces)
    if (sign * t < 0) return false;
  return true;
}

}  // namespace lemod
