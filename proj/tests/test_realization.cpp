#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include "lemod/case_engine.hpp"
#include "lemod/json_io.hpp"
#include "lemod/realization.hpp"

using namespace lemod;

namespace {

CyclotomicMultiset ms(std::initializer_list<std::pair<Int, Int>> items) {
  CyclotomicMultiset out;
  for (auto& [d, m] : items) out.add(d, m);
  return out;
}

IntMatrix M(std::vector<std::vector<Int>> rows) {
  const Int r = static_cast<Int>(rows.size());
  const Int c = r == 0 ? 0 : static_cast<Int>(rows[0].size());
  IntMatrix m(r, c);
  for (Int i = 0; i < r; ++i)
    for (Int j = 0; j < c; ++j)
      m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

Scenario cone52(Int lambda1, Int n = 3) {
  return make_scenario(n, 2, LinkModel::cone_a1(),
                       {std::nullopt, lambda1, Int(2)},
                       {Flag::top_differential_nonzero});
}

}  // namespace

TEST_CASE("companion matrices") {
  CHECK(companion_matrix(cyclotomic_poly(1)) == M({{1}}));
  CHECK(companion_matrix(expand(ms({{6, 1}}))) == M({{0, -1}, {1, 1}}));
  CHECK(companion_matrix(expand(ms({{1, 2}}))) == M({{0, -1}, {1, 2}}));
  CHECK(companion_matrix(expand(ms({{6, 1}}))).trace() == 1);
  CHECK(companion_matrix(expand(ms({{1, 2}}))).trace() == 2);
}

TEST_CASE("characteristic polynomial recovers the companion input") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<Int> pick_d(1, 12), pick_m(1, 2), pick_k(1, 3);
  for (int iter = 0; iter < 100; ++iter) {
    CyclotomicMultiset m;
    for (Int k = pick_k(rng); k > 0; --k) m.add(pick_d(rng), pick_m(rng));
    const IntPolynomial p = expand(m);
    CHECK(charpoly(companion_matrix(p)) == p);
    const Integer d = det(companion_matrix(p));
    CHECK((d == 1 || d == -1));
  }
  CHECK(charpoly(IntMatrix(0, 0)) == IntPolynomial::one());
}

TEST_CASE("witness for the cone's case a matches the block recipe") {
  const Scenario sc = cone52(2);
  const std::vector<CaseProfile> cases = enumerate_cases(sc);
  REQUIRE(cases.size() == 3);
  const ComplexRealization r = realize(cases[0], Int(1));
  CHECK(r.ranks == std::vector<Int>({1, 2, 2}));
  CHECK(r.monodromy[2] == M({{0, -1}, {1, 2}}));  // companion of (t-1)^2
  CHECK(r.differentials[1] == M({{1, 0}, {0, 1}}));
  CHECK(r.monodromy[1] == M({{0, -1}, {1, 2}}));
  CHECK(r.differentials[0] == M({{0, 0}}));
  CHECK(r.monodromy[0] == M({{1}}));
  CHECK(verify(r, sc, &cases[0], Int(1)).ok());
}

TEST_CASE("empty realization is vacuously valid on the matrix checks") {
  // An all-zero Le vector never comes out of enumeration (the traces of a
  // valid scenario always telescope to -1), so build the profile by hand.
  CaseProfile zero;
  zero.levels.assign(2, LevelDecomposition{});
  const ComplexRealization r = realize(zero);
  CHECK(r.ranks == std::vector<Int>({0, 0}));
  const Scenario sc = make_scenario(3, 1, LinkModel::smooth(), {Int(0), Int(0)});
  const VerificationReport report = verify(r, sc);
  for (const std::string& f : report.failures)
    CHECK(f.find("trace") != std::string::npos);  // only the trace formula fails
  for (const auto& [k, b] : report.betti) CHECK(b == 0);
}

TEST_CASE("round-trip: realize then verify across concrete desk-scale cases") {
  std::vector<Scenario> scenarios;
  for (Int l0 = 0; l0 <= 3; ++l0)
    for (Int l1 = 0; l1 <= 3; ++l1) {
      scenarios.push_back(
          make_scenario(3, 1, LinkModel::smooth(), {l0, l1}));
      scenarios.push_back(
          make_scenario(2, 1, LinkModel::branch_curve(2), {l0, l1}));
      for (Int l2 = 0; l2 <= 3; ++l2) {
        scenarios.push_back(
            make_scenario(3, 2, LinkModel::cone_a1(), {l0, l1, l2}));
        scenarios.push_back(
            make_scenario(4, 2, LinkModel::smooth(), {l0, l1, l2}));
      }
    }
  size_t checked = 0;
  for (const Scenario& sc : scenarios)
    for (const CaseProfile& profile : enumerate_cases(sc)) {
      const ComplexRealization r = realize(profile);
      const VerificationReport report = verify(r, sc, &profile);
      CHECK(report.ok());
      if (!report.ok())
        for (const std::string& f : report.failures) UNSCOPED_INFO(f);
      ++checked;
    }
  CHECK(checked > 100);
}

TEST_CASE("round-trip at the symbolic lower bound for the worked scenarios") {
  const std::vector<Scenario> scenarios = {
      make_scenario(3, 1, LinkModel::smooth(), {std::nullopt, Int(1)},
                    {Flag::swing}),
      make_scenario(3, 1, LinkModel::smooth(), {std::nullopt, Int(2)},
                    {Flag::swing}),
      cone52(2), cone52(3), cone52(2, 4), cone52(3, 4)};
  for (const Scenario& sc : scenarios)
    for (const CaseProfile& profile : enumerate_cases(sc)) {
      REQUIRE(profile.lambda0);
      const Int at = profile.lambda0->lower_bound;
      const ComplexRealization r = realize(profile, at);
      const VerificationReport report = verify(r, sc, &profile, at);
      CHECK(report.ok());
      if (!report.ok())
        for (const std::string& f : report.failures) UNSCOPED_INFO(f);
    }
}

TEST_CASE("audits: Euler characteristic and Lefschetz bookkeeping") {
  for (const Scenario& sc :
       {cone52(2), cone52(3),
        make_scenario(3, 2, LinkModel::cone_a1(), {Int(3), Int(3), Int(2)})}) {
    for (const CaseProfile& profile : enumerate_cases(sc)) {
      const ComplexRealization r = realize(profile);
      const VerificationReport report = verify(r, sc, &profile);
      REQUIRE(report.ok());

      Int lhs = 0;
      for (Int j = 0; j <= sc.s; ++j)
        lhs += sign_pow(sc.n - j) * r.ranks[static_cast<size_t>(j)];
      Int rhs = 0;
      for (const auto& [k, b] : report.betti) rhs += sign_pow(k) * b;
      CHECK(lhs == rhs);

      Integer traces_alt = 0;
      for (Int j = 0; j <= sc.s; ++j)
        traces_alt +=
            sign_pow(sc.n - j) * r.monodromy[static_cast<size_t>(j)].trace();
      CHECK(traces_alt == -1);  // telescoping through the witness

      // the same sum through the cohomology pieces (Hopf trace formula)
      Integer hopf = 0;
      for (Int j = 0; j <= sc.s; ++j) {
        const LevelDecomposition& lv = profile.level(j);
        Int tr = lv.cp_h ? lv.cp_h->trace() : 0;
        if (!lv.cp_h) {
          // symbolic level: realize picked the first admissible multiset
          const auto opts = enumerate_charpolys(
              r.ranks[0] - lv.rank_in, profile.lambda0->residual_trace);
          tr = opts.front().trace();
        }
        hopf += sign_pow(sc.n - j) * tr;
      }
      CHECK(hopf == -1);
    }
  }
}

TEST_CASE("tampered witnesses are rejected") {
  const Scenario sc = cone52(2);
  const std::vector<CaseProfile> cases = enumerate_cases(sc);
  const CaseProfile& a = cases[0];

  SECTION("negating a differential entry breaks equivariance or d.d = 0") {
    ComplexRealization r = realize(a, Int(1));
    r.differentials[1].at(0, 0) = -r.differentials[1].at(0, 0);
    const VerificationReport report = verify(r, sc, &a, Int(1));
    CHECK_FALSE(report.ok());
  }

  SECTION("non-unimodular monodromy fails the determinant check") {
    ComplexRealization r = realize(a, Int(1));
    r.monodromy[0] = M({{2}});
    const VerificationReport report = verify(r, sc, &a, Int(1));
    CHECK_FALSE(report.ok());
    bool det_failure = false;
    for (const std::string& f : report.failures)
      if (f.find("determinant") != std::string::npos) det_failure = true;
    CHECK(det_failure);
  }

  SECTION("a non-quasi-unipotent monodromy is reported") {
    ComplexRealization r = realize(a, Int(1));
    r.monodromy[0] = M({{-1}});
    r.monodromy[1] = M({{2, 3}, {1, 2}});  // det 1, trace 4, eigenvalues 2 +- sqrt3
    const VerificationReport report = verify(r, sc);
    bool qu_failure = false;
    for (const std::string& f : report.failures)
      if (f.find("quasi_unipotent") != std::string::npos) qu_failure = true;
    CHECK(qu_failure);
  }

  SECTION("wrong trace against the scenario formula") {
    ComplexRealization r = realize(a, Int(1));
    r.monodromy[0] = M({{-1}});  // still unimodular and quasi-unipotent
    const VerificationReport report = verify(r, sc);
    bool trace_failure = false;
    for (const std::string& f : report.failures)
      if (f.find("trace") != std::string::npos) trace_failure = true;
    CHECK(trace_failure);
  }
}

TEST_CASE("verify handles malformed input without throwing") {
  const Scenario sc = cone52(2);
  ComplexRealization r;
  r.ranks = {1, 2};  // wrong level count
  r.monodromy = {IntMatrix::identity(1), IntMatrix::identity(2)};
  r.differentials = {IntMatrix(1, 2)};
  const VerificationReport report = verify(r, sc);
  CHECK_FALSE(report.ok());

  ComplexRealization bad;
  bad.ranks = {1, 2, 2};
  bad.monodromy = {IntMatrix::identity(1), IntMatrix::identity(2),
                   IntMatrix::identity(2)};
  bad.differentials = {IntMatrix(2, 2), IntMatrix(2, 2)};  // D_1 mis-shaped
  CHECK_FALSE(verify(bad, sc).ok());
}

TEST_CASE("realize rejects lambda^0 outside the constraint") {
  const Scenario sc = cone52(3);
  const std::vector<CaseProfile> cases = enumerate_cases(sc);
  const CaseProfile& d = cases[0];  // lower bound 2, excluded {3}
  CHECK_THROWS_AS(realize(d, Int(1)), Error);
  CHECK_THROWS_AS(realize(d, Int(3)), Error);
  CHECK(verify(realize(d, Int(4)), sc, &d, Int(4)).ok());

  const auto pinned = enumerate_cases(make_scenario(
      3, 1, LinkModel::smooth(), {std::nullopt, Int(1)}, {Flag::swing}))[1];
  REQUIRE(pinned.lambda0->exact);
  CHECK_THROWS_AS(realize(pinned, Int(1)), Error);
}

TEST_CASE("integral torsion of block witnesses is trivial") {
  const Scenario sc = cone52(3);
  for (const CaseProfile& profile : enumerate_cases(sc)) {
    const VerificationReport report = verify(realize(profile), sc, &profile);
    for (const auto& [k, divisors] : report.torsion) CHECK(divisors.empty());
  }
}

TEST_CASE("realization JSON round-trip") {
  const Scenario sc = cone52(3);
  const std::vector<CaseProfile> cases = enumerate_cases(sc);
  for (const CaseProfile& profile : cases) {
    const ComplexRealization r = realize(profile);
    CHECK(realization_from_json(realization_to_json(r)) == r);
  }
  // big entries survive via the decimal-string rule
  ComplexRealization big;
  big.ranks = {1};
  big.monodromy = {M({{1}})};
  big.monodromy[0].at(0, 0) = Integer("123456789012345678901234567890");
  CHECK(realization_from_json(realization_to_json(big)) == big);
}
