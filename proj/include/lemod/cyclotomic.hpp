#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lemod/polynomial.hpp"

namespace lemod {

// Euler totient by trial factorization.
inline Int totient(Int d) {
  if (d < 1) throw std::invalid_argument("totient: d must be >= 1");
  Int phi = d, m = d;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    phi -= phi / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) phi -= phi / m;
  return phi;
}

// Moebius function; equals the sum of the primitive d-th roots of unity.
inline int moebius(Int d) {
  if (d < 1) throw std::invalid_argument("moebius: d must be >= 1");
  int sign = 1;
  Int m = d;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

namespace detail {

inline const IntPolynomial& cyclotomic_impl(Int d,
                                            std::map<Int, IntPolynomial>& cache) {
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  IntPolynomial phi = IntPolynomial::t_power_minus_one(d);
  for (Int e = 1; e < d; ++e)
    if (d % e == 0) phi = phi.divide_exact(cyclotomic_impl(e, cache));
  return cache.emplace(d, std::move(phi)).first->second;
}

}  // namespace detail

// The d-th cyclotomic polynomial, by exact division of t^d - 1 by all
// lower-index factors. Degree phi(d); next-to-leading coefficient -mu(d).
inline IntPolynomial cyclotomic_poly(Int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_poly: d must be >= 1");
  static std::map<Int, IntPolynomial> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  return detail::cyclotomic_impl(d, cache);
}

// A multiset of cyclotomic indices: the characteristic polynomial
// prod_d Phi_d^{m_d} of a quasi-unipotent automorphism, kept factored.
struct CyclotomicMultiset {
  std::map<Int, Int> mults;  // d -> multiplicity, entries always >= 1

  void add(Int d, Int m = 1) {
    if (d < 1 || m < 1)
      throw std::invalid_argument("CyclotomicMultiset::add: need d, m >= 1");
    mults[d] += m;
  }

  bool empty() const { return mults.empty(); }

  Int degree() const {
    Int sum = 0;
    for (const auto& [d, m] : mults) sum += m * totient(d);
    return sum;
  }

  Int trace() const {
    Int sum = 0;
    for (const auto& [d, m] : mults) sum += m * moebius(d);
    return sum;
  }

  auto operator<=>(const CyclotomicMultiset&) const = default;

  // "Φ1^2·Φ6"; the empty product renders as "1".
  std::string str() const {
    if (mults.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, m] : mults) {
      if (!first) out << "\xC2\xB7";  // '·'
      first = false;
      out << "\xCE\xA6" << d;  // 'Φ'
      if (m > 1) out << "^" << m;
    }
    return out.str();
  }
};

inline IntPolynomial expand(const CyclotomicMultiset& ms) {
  IntPolynomial prod = IntPolynomial::one();
  for (const auto& [d, m] : ms.mults) prod = prod * cyclotomic_poly(d).pow(m);
  return prod;
}

// All d with phi(d) <= degree_bound, ascending. Complete: phi(d) >= sqrt(d/2),
// so every such d is at most 2*degree_bound^2.
inline std::vector<Int> cyclotomic_index_candidates(Int degree_bound) {
  std::vector<Int> out;
  if (degree_bound < 1) return out;
  for (Int d = 1; d <= 2 * degree_bound * degree_bound; ++d)
    if (totient(d) <= degree_bound) out.push_back(d);
  return out;
}

// Every multiset with total degree `degree` and root sum `trace`, in
// canonical (map-lexicographic) order. Empty result means infeasible;
// degree 0, trace 0 admits exactly the empty product.
inline std::vector<CyclotomicMultiset> enumerate_charpolys(Int degree,
                                                           Int trace) {
  if (degree < 0) throw std::invalid_argument("enumerate_charpolys: degree < 0");
  std::vector<CyclotomicMultiset> results;
  struct Candidate {
    Int d, phi;
    int mu;
  };
  std::vector<Candidate> cands;
  for (Int d : cyclotomic_index_candidates(degree))
    cands.push_back({d, totient(d), moebius(d)});

  CyclotomicMultiset current;
  // Each factor eats at least one unit of degree and moves the trace by at
  // most one, so a branch with |trace| > degree left is dead.
  auto dfs = [&](auto&& self, size_t idx, Int deg_left, Int tr_left) -> void {
    Int abs_tr = tr_left < 0 ? -tr_left : tr_left;
    if (abs_tr > deg_left) return;
    if (deg_left == 0) {
      if (tr_left == 0) results.push_back(current);
      return;
    }
    if (idx == cands.size()) return;
    const Candidate& c = cands[idx];
    Int max_mult = deg_left / c.phi;
    for (Int m = 0; m <= max_mult; ++m) {
      if (m > 0) current.mults[c.d] = m;
      self(self, idx + 1, deg_left - m * c.phi, tr_left - m * c.mu);
    }
    current.mults.erase(c.d);
  };
  dfs(dfs, 0, degree, trace);
  std::sort(results.begin(), results.end());
  return results;
}

inline bool feasible_degree_trace(Int degree, Int trace) {
  return !enumerate_charpolys(degree, trace).empty();
}

// Allowed degrees for a fixed trace when the degree itself is symbolic:
// every D >= min_degree except the listed isolated exclusions.
struct DegreeFeasibility {
  Int min_degree = 0;
  std::vector<Int> excluded;

  bool allows(Int d) const {
    if (d < min_degree) return false;
    return std::find(excluded.begin(), excluded.end(), d) == excluded.end();
  }
};

// trace == 0: D = 0 or D >= 2 (a single degree-1 factor has trace ±1);
// trace != 0: D >= |trace|.
inline DegreeFeasibility feasible_degree_trace_symbolic(Int trace) {
  DegreeFeasibility f;
  if (trace == 0) {
    f.min_degree = 0;
    f.excluded = {1};
  } else {
    f.min_degree = trace < 0 ? -trace : trace;
  }
  return f;
}

}  // namespace lemod
