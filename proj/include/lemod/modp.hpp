#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "lemod/matrix.hpp"
#include "lemod/realization.hpp"

namespace lemod {

inline bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Counts of p-power cyclic direct summands of the integral cohomology,
// per degree. Cohomology lives in degrees n-s..n, so counts vanish
// elsewhere; in particular t_{n+1} = 0 always.
struct TorsionProfile {
  Int p = 2;
  std::map<Int, Int> counts;  // degree k -> number of p-power summands

  Int at(Int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
};

// Universal-coefficient dimension over the p-element field:
//   dim H^k(F; Z/p) = b_k + t_k + t_{k+1}.
inline Int uct_dimension(const std::map<Int, Int>& betti,
                         const TorsionProfile& torsion, Int k) {
  auto b = betti.find(k);
  return (b == betti.end() ? 0 : b->second) + torsion.at(k) + torsion.at(k + 1);
}

// One inequality b_k + t_k + t_{k+1} <= lambda^j with k = n - j, rewritten
// as a bound on the torsion counts. Degrees outside the support window
// n-s..n are dropped from the left-hand side.
struct TorsionInequality {
  Int level = 0;   // j
  Int degree = 0;  // k = n - j
  std::vector<Int> torsion_degrees;
  Int bound = 0;  // lambda^j - b_k

  bool operator==(const TorsionInequality&) const = default;
};

// The mod-p complex has the same ranks lambda^j, so its cohomology in
// degree n-j has dimension at most lambda^j; via the universal coefficient
// theorem this caps the torsion counts. Emitted per level j = 0..s. The
// bounds are the same for every prime; p only labels which torsion is
// being counted.
inline std::vector<TorsionInequality> torsion_bounds(
    const std::vector<Int>& le_numbers, const std::map<Int, Int>& betti, Int p,
    Int n) {
  if (!is_prime(p)) throw std::invalid_argument("torsion_bounds: p not prime");
  const Int s = static_cast<Int>(le_numbers.size()) - 1;
  std::vector<TorsionInequality> out;
  for (Int j = 0; j <= s; ++j) {
    TorsionInequality ineq;
    ineq.level = j;
    ineq.degree = n - j;
    for (Int k : {n - j, n - j + 1})
      if (k >= n - s && k <= n) ineq.torsion_degrees.push_back(k);
    auto b = betti.find(n - j);
    ineq.bound = le_numbers[static_cast<size_t>(j)] -
                 (b == betti.end() ? 0 : b->second);
    out.push_back(std::move(ineq));
  }
  return out;
}

// Reduce the differentials mod p and compute the cohomology dimensions of
// the resulting complex of (Z/p)-vector spaces, keyed by degree n-j.
inline std::map<Int, Int> reduce_and_rank(const ComplexRealization& r, Int p,
                                          Int n) {
  if (!is_prime(p)) throw std::invalid_argument("reduce_and_rank: p not prime");
  const Int s = r.top_level();
  std::vector<Int> ranks_p(static_cast<size_t>(s) + 2, 0);
  for (Int j = 1; j <= s; ++j)
    ranks_p[static_cast<size_t>(j)] =
        rank_mod_p(r.differentials[static_cast<size_t>(j - 1)], p);
  std::map<Int, Int> dims;
  for (Int j = 0; j <= s; ++j)
    dims[n - j] = r.ranks[static_cast<size_t>(j)] -
                  ranks_p[static_cast<size_t>(j)] -
                  ranks_p[static_cast<size_t>(j + 1)];
  return dims;
}

// Torsion counts read off a verification report: the number of elementary
// divisors divisible by p, per degree.
inline TorsionProfile torsion_profile_from_report(
    const VerificationReport& report, Int p) {
  TorsionProfile t;
  t.p = p;
  for (const auto& [k, divisors] : report.torsion) {
    Int count = 0;
    for (const Integer& d : divisors)
      if (d % p == 0) ++count;
    if (count > 0) t.counts[k] = count;
  }
  return t;
}

}  // namespace lemod
