#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include "lemod/cyclotomic.hpp"

using namespace lemod;

namespace {

// Test-local polynomial arithmetic over long long, constant term first.
// Deliberately separate from the library implementation.
using Poly = std::vector<long long>;

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(out);
}

// classic long division by a monic divisor
std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
  REQUIRE(!den.empty());
  REQUIRE(den.back() == 1);
  Poly quo;
  if (num.size() >= den.size()) quo.assign(num.size() - den.size() + 1, 0);
  for (size_t k = num.size(); k-- >= den.size() && k + 1 >= den.size();) {
    long long lead = num[k];
    if (lead != 0) {
      quo[k - (den.size() - 1)] = lead;
      for (size_t i = 0; i < den.size(); ++i)
        num[k - (den.size() - 1) + i] -= lead * den[i];
    }
    if (k + 1 == den.size()) break;
  }
  return {trim(quo), trim(num)};
}

Poly to_ll(const IntPolynomial& p) {
  Poly out;
  for (const Integer& c : p.coeffs()) out.push_back(c.convert_to<long long>());
  return out;
}

// Hand-checked tables for d <= 18, used by the brute-force oracle.
const std::map<Int, Int> kPhi = {{1, 1},  {2, 1},  {3, 2},  {4, 2},  {5, 4},
                                 {6, 2},  {7, 6},  {8, 4},  {9, 6},  {10, 4},
                                 {11, 10}, {12, 4}, {13, 12}, {14, 6}, {15, 8},
                                 {16, 8}, {17, 16}, {18, 6}};
const std::map<Int, Int> kMu = {{1, 1},  {2, -1}, {3, -1}, {4, 0},  {5, -1},
                                {6, 1},  {7, -1}, {8, 0},  {9, 0},  {10, 1},
                                {11, -1}, {12, 0}, {13, -1}, {14, 1}, {15, 1},
                                {16, 0}, {17, -1}, {18, 0}};

// Brute-force enumeration of all multisets over d <= 18 with phi(d) <= 6,
// independent of the production search.
std::vector<CyclotomicMultiset> oracle_enumerate(Int degree, Int trace) {
  std::vector<Int> ds;
  for (const auto& [d, phi] : kPhi)
    if (phi <= 6) ds.push_back(d);
  std::vector<CyclotomicMultiset> out;
  CyclotomicMultiset cur;
  auto rec = [&](auto&& self, size_t i, Int deg, Int tr) -> void {
    if (i == ds.size()) {
      if (deg == degree && tr == trace) out.push_back(cur);
      return;
    }
    Int d = ds[i];
    for (Int m = 0; deg + m * kPhi.at(d) <= degree; ++m) {
      if (m > 0) cur.mults[d] = m;
      self(self, i + 1, deg + m * kPhi.at(d), tr + m * kMu.at(d));
    }
    cur.mults.erase(d);
  };
  rec(rec, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

CyclotomicMultiset ms(std::initializer_list<std::pair<Int, Int>> items) {
  CyclotomicMultiset out;
  for (auto& [d, m] : items) out.add(d, m);
  return out;
}

}  // namespace

TEST_CASE("totient and moebius basics") {
  for (const auto& [d, phi] : kPhi) CHECK(totient(d) == phi);
  for (const auto& [d, mu] : kMu) CHECK(moebius(d) == mu);
  CHECK(totient(200) == 80);
  CHECK(moebius(30) == -1);
  CHECK(moebius(210) == 1);
}

TEST_CASE("cyclotomic polynomials match the long-division oracle") {
  const Poly phi1 = {-1, 1};       // t - 1
  const Poly phi2 = {1, 1};        // t + 1
  const Poly phi3 = {1, 1, 1};     // t^2 + t + 1

  CHECK(to_ll(cyclotomic_poly(1)) == phi1);

  // Phi_6 = (t^6 - 1) / (Phi_1 Phi_2 Phi_3)
  Poly t6({-1, 0, 0, 0, 0, 0, 1});
  auto [q6, r6] = divmod(t6, mul(mul(phi1, phi2), phi3));
  CHECK(r6.empty());
  CHECK(q6 == Poly({1, -1, 1}));
  CHECK(to_ll(cyclotomic_poly(6)) == q6);

  // Phi_4 = (t^4 - 1) / (Phi_1 Phi_2)
  Poly t4({-1, 0, 0, 0, 1});
  auto [q4, r4] = divmod(t4, mul(phi1, phi2));
  CHECK(r4.empty());
  CHECK(q4 == Poly({1, 0, 1}));
  CHECK(to_ll(cyclotomic_poly(4)) == q4);
}

TEST_CASE("cyclotomic invariants up to index 200") {
  for (Int d = 1; d <= 200; ++d) {
    const IntPolynomial phi = cyclotomic_poly(d);
    CHECK(phi.degree() == totient(d));
    CHECK(phi.monic());
    CHECK(phi.coeff(phi.degree() - 1) == -moebius(d));
    CHECK(IntPolynomial::t_power_minus_one(d).divisible_by(phi));
  }
}

TEST_CASE("product of Phi_e over divisors of d is t^d - 1") {
  for (Int d = 1; d <= 60; ++d) {
    IntPolynomial prod = IntPolynomial::one();
    for (Int e = 1; e <= d; ++e)
      if (d % e == 0) prod = prod * cyclotomic_poly(e);
    CHECK(prod == IntPolynomial::t_power_minus_one(d));
  }
}

TEST_CASE("expand") {
  CHECK(expand(ms({{1, 2}})).str() == "t^2 - 2t + 1");
  CHECK(expand(ms({{6, 1}})).str() == "t^2 - t + 1");
  CHECK(expand(ms({{3, 1}})).str() == "t^2 + t + 1");
  CHECK(expand(CyclotomicMultiset{}) == IntPolynomial::one());
}

TEST_CASE("multiset degree and trace agree with the expanded polynomial") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> pick_d(1, 30), pick_m(1, 3), pick_k(0, 3);
  for (int iter = 0; iter < 200; ++iter) {
    CyclotomicMultiset m;
    for (Int k = pick_k(rng); k > 0; --k) m.add(pick_d(rng), pick_m(rng));
    const IntPolynomial p = expand(m);
    CHECK(p.degree() == m.degree());
    CHECK(p.trace() == m.trace());
    CHECK(p.monic());
  }
}

TEST_CASE("enumerate_charpolys on the worked degree-2 cases") {
  CHECK(enumerate_charpolys(1, 0).empty());
  CHECK(enumerate_charpolys(2, 2) == std::vector<CyclotomicMultiset>{ms({{1, 2}})});
  CHECK(enumerate_charpolys(2, 1) == std::vector<CyclotomicMultiset>{ms({{6, 1}})});
  CHECK(enumerate_charpolys(2, -1) == std::vector<CyclotomicMultiset>{ms({{3, 1}})});
  CHECK(enumerate_charpolys(2, 0) ==
        std::vector<CyclotomicMultiset>{ms({{1, 1}, {2, 1}}), ms({{4, 1}})});
  CHECK(enumerate_charpolys(0, 0) ==
        std::vector<CyclotomicMultiset>{CyclotomicMultiset{}});
  CHECK(enumerate_charpolys(0, 1).empty());
}

TEST_CASE("enumeration is complete against the brute-force oracle") {
  for (Int degree = 0; degree <= 6; ++degree)
    for (Int trace = -8; trace <= 8; ++trace)
      CHECK(enumerate_charpolys(degree, trace) == oracle_enumerate(degree, trace));
}

TEST_CASE("extreme traces force (t -+ 1)^lambda") {
  for (Int lambda = 0; lambda <= 10; ++lambda) {
    std::vector<CyclotomicMultiset> plus = enumerate_charpolys(lambda, lambda);
    std::vector<CyclotomicMultiset> minus = enumerate_charpolys(lambda, -lambda);
    REQUIRE(plus.size() == 1);
    REQUIRE(minus.size() == 1);
    if (lambda == 0) {
      CHECK(plus.front().empty());
    } else {
      CHECK(plus.front() == ms({{1, lambda}}));
      CHECK(minus.front() == ms({{2, lambda}}));
    }
    for (Int over = 1; over <= 3; ++over) {
      CHECK(enumerate_charpolys(lambda, lambda + over).empty());
      CHECK(enumerate_charpolys(lambda, -lambda - over).empty());
    }
  }
}

TEST_CASE("symbolic degree feasibility matches concrete enumeration") {
  for (Int trace = -14; trace <= 14; ++trace) {
    const DegreeFeasibility rule = feasible_degree_trace_symbolic(trace);
    for (Int degree = 0; degree <= 12; ++degree)
      CHECK(rule.allows(degree) == feasible_degree_trace(degree, trace));
  }
}

TEST_CASE("rendering") {
  CHECK(ms({{1, 2}, {6, 1}}).str() == "\xCE\xA6"
                                      "1^2\xC2\xB7\xCE\xA6"
                                      "6");
  CHECK(CyclotomicMultiset{}.str() == "1");
  CHECK(cyclotomic_poly(1).str() == "t - 1");
  CHECK(cyclotomic_poly(4).str() == "t^2 + 1");
  CHECK(IntPolynomial::one().str() == "1");
  CHECK(IntPolynomial({Integer(1), Integer(-2), Integer(1)}).str() ==
        "t^2 - 2t + 1");
}
