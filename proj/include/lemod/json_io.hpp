#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lemod/case_engine.hpp"
#include "lemod/error.hpp"
#include "lemod/modp.hpp"
#include "lemod/realization.hpp"
#include "lemod/scenario.hpp"
#include "lemod/traces.hpp"

namespace lemod {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they fit the double-exact
// range and as decimal strings beyond 2^53 - 1.
inline Json integer_to_json(const Integer& v) {
  static const Integer kMax = (Integer(1) << 53) - 1;
  if (v <= kMax && v >= -kMax) return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

inline Integer integer_from_json(const Json& j, const std::string& key) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(Errc::parse_error, "key '" + key + "' must be an integer");
}

inline Int int_from_json(const Json& j, const std::string& key) {
  if (!j.is_number_integer())
    throw Error(Errc::parse_error, "key '" + key + "' must be an integer");
  return j.get<Int>();
}

// ---- scenario files --------------------------------------------------

inline Json link_model_to_json(const LinkModel& m) {
  switch (m.kind) {
    case LinkModel::Kind::smooth: return Json("smooth");
    case LinkModel::Kind::cone_a1: return Json("cone_a1");
    case LinkModel::Kind::branch_curve: return Json{{"branch_curve", m.branches}};
    case LinkModel::Kind::explicit_chis: {
      Json chis = Json::array();
      for (Int c : m.chis) chis.push_back(c);
      return Json{{"explicit", chis}};
    }
  }
  throw Error(Errc::parse_error, "unknown link model");
}

inline LinkModel link_model_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "smooth") return LinkModel::smooth();
    if (name == "cone_a1") return LinkModel::cone_a1();
    throw Error(Errc::parse_error, "key 'link_model': unknown model '" + name + "'");
  }
  if (j.is_object() && j.size() == 1) {
    if (j.contains("branch_curve"))
      return LinkModel::branch_curve(
          int_from_json(j.at("branch_curve"), "branch_curve"));
    if (j.contains("explicit")) {
      const Json& arr = j.at("explicit");
      if (!arr.is_array())
        throw Error(Errc::parse_error, "key 'explicit' must be an array");
      std::vector<Int> chis;
      for (const Json& v : arr) chis.push_back(int_from_json(v, "explicit"));
      return LinkModel::explicit_chis(std::move(chis));
    }
  }
  throw Error(Errc::parse_error, "key 'link_model' is malformed");
}

inline Json scenario_to_json(const Scenario& sc) {
  Json j;
  j["n"] = sc.n;
  j["s"] = sc.s;
  j["link_model"] = link_model_to_json(sc.link_model);
  Json le = Json::array();
  for (const LeNumber& v : sc.le_numbers) {
    if (v)
      le.push_back(*v);
    else
      le.push_back(nullptr);
  }
  j["le_numbers"] = le;
  Json flags = Json::array();
  for (Flag f : sc.flags) flags.push_back(flag_name(f));
  j["flags"] = flags;
  return j;
}

inline Scenario scenario_from_json(const Json& j) {
  if (!j.is_object())
    throw Error(Errc::parse_error, "scenario must be a JSON object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "n" && key != "s" && key != "link_model" &&
        key != "le_numbers" && key != "flags")
      throw Error(Errc::parse_error, "unexpected key '" + key + "'");
  }
  for (const char* key : {"n", "s", "link_model"})
    if (!j.contains(key))
      throw Error(Errc::parse_error, std::string("missing key '") + key + "'");

  const Int n = int_from_json(j.at("n"), "n");
  const Int s = int_from_json(j.at("s"), "s");
  const LinkModel model = link_model_from_json(j.at("link_model"));

  std::vector<LeNumber> le;
  if (j.contains("le_numbers")) {
    const Json& arr = j.at("le_numbers");
    if (!arr.is_array())
      throw Error(Errc::parse_error, "key 'le_numbers' must be an array");
    for (const Json& v : arr) {
      if (v.is_null())
        le.push_back(std::nullopt);
      else
        le.push_back(int_from_json(v, "le_numbers"));
    }
  }

  std::set<Flag> flags;
  if (j.contains("flags")) {
    const Json& arr = j.at("flags");
    if (!arr.is_array())
      throw Error(Errc::parse_error, "key 'flags' must be an array");
    for (const Json& v : arr) {
      if (!v.is_string())
        throw Error(Errc::parse_error, "key 'flags' must hold strings");
      auto f = flag_from_name(v.get<std::string>());
      if (!f)
        throw Error(Errc::parse_error,
                    "key 'flags': unknown flag '" + v.get<std::string>() + "'");
      flags.insert(*f);
    }
  }
  return make_scenario(n, s, model, std::move(le), std::move(flags));
}

inline Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw Error(Errc::parse_error, "invalid JSON in '" + path + "': " + e.what());
  }
  return scenario_from_json(j);
}

// ---- realizations ----------------------------------------------------

inline Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Int j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline IntMatrix matrix_from_json(const Json& j, Int rows, Int cols,
                                  const std::string& key) {
  IntMatrix m(rows, cols);
  if (!j.is_array())
    throw Error(Errc::parse_error, "key '" + key + "' must be an array");
  if (rows == 0 || cols == 0) {
    if (!j.empty() && static_cast<Int>(j.size()) != rows)
      throw Error(Errc::parse_error, "key '" + key + "' has the wrong shape");
    return m;
  }
  if (static_cast<Int>(j.size()) != rows)
    throw Error(Errc::parse_error, "key '" + key + "' has the wrong row count");
  for (Int i = 0; i < rows; ++i) {
    const Json& row = j.at(static_cast<size_t>(i));
    if (!row.is_array() || static_cast<Int>(row.size()) != cols)
      throw Error(Errc::parse_error, "key '" + key + "' has the wrong column count");
    for (Int c = 0; c < cols; ++c)
      m.at(i, c) = integer_from_json(row.at(static_cast<size_t>(c)), key);
  }
  return m;
}

inline Json realization_to_json(const ComplexRealization& r) {
  Json j;
  Json lambda = Json::array();
  for (Int v : r.ranks) lambda.push_back(v);
  j["lambda"] = lambda;
  Json mono = Json::array();
  for (const IntMatrix& a : r.monodromy) mono.push_back(matrix_to_json(a));
  j["monodromy"] = mono;
  Json diffs = Json::array();
  for (const IntMatrix& d : r.differentials) diffs.push_back(matrix_to_json(d));
  j["differentials"] = diffs;
  return j;
}

inline ComplexRealization realization_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("monodromy") ||
      !j.contains("differentials"))
    throw Error(Errc::parse_error,
                "realization needs keys 'lambda', 'monodromy', 'differentials'");
  ComplexRealization r;
  for (const Json& v : j.at("lambda"))
    r.ranks.push_back(int_from_json(v, "lambda"));
  const Int s = static_cast<Int>(r.ranks.size()) - 1;
  if (s < 0) throw Error(Errc::parse_error, "key 'lambda' must be nonempty");
  const Json& mono = j.at("monodromy");
  if (!mono.is_array() || static_cast<Int>(mono.size()) != s + 1)
    throw Error(Errc::parse_error, "key 'monodromy' must list s+1 matrices");
  for (Int lvl = 0; lvl <= s; ++lvl)
    r.monodromy.push_back(matrix_from_json(mono.at(static_cast<size_t>(lvl)),
                                           r.ranks[static_cast<size_t>(lvl)],
                                           r.ranks[static_cast<size_t>(lvl)],
                                           "monodromy"));
  const Json& diffs = j.at("differentials");
  if (!diffs.is_array() || static_cast<Int>(diffs.size()) != s)
    throw Error(Errc::parse_error, "key 'differentials' must list s matrices");
  for (Int lvl = 1; lvl <= s; ++lvl)
    r.differentials.push_back(
        matrix_from_json(diffs.at(static_cast<size_t>(lvl - 1)),
                         r.ranks[static_cast<size_t>(lvl - 1)],
                         r.ranks[static_cast<size_t>(lvl)], "differentials"));
  return r;
}

// ---- report fragments ------------------------------------------------

inline Json multiset_to_json(const CyclotomicMultiset& ms) {
  Json factors = Json::object();
  for (const auto& [d, m] : ms.mults) factors[std::to_string(d)] = m;
  return Json{{"factors", factors}, {"text", ms.str()}};
}

inline Json affine_to_json(const AffineRank& r) {
  if (!r.depends_on_lambda0) return Json(r.offset);
  return Json(r.str());
}

inline Json profile_to_json(const CaseProfile& p, Int n) {
  Json levels = Json::array();
  for (Int j = p.top_level(); j >= 0; --j) {
    const LevelDecomposition& lv = p.level(j);
    Json l;
    l["level"] = j;
    l["rank_in"] = lv.rank_in;
    if (lv.rank_h)
      l["rank_h"] = *lv.rank_h;
    else
      l["rank_h"] = AffineRank{true, -lv.rank_in}.str();
    l["rank_coim"] = lv.rank_coim;
    l["cp_in"] = multiset_to_json(lv.cp_in);
    l["cp_h"] = lv.cp_h ? multiset_to_json(*lv.cp_h) : Json(nullptr);
    l["cp_coim"] = multiset_to_json(lv.cp_coim);
    auto combined = p.charpoly_multiset(j);
    if (combined) {
      Json cp = multiset_to_json(*combined);
      cp["polynomial"] = expand(*combined).str();
      l["charpoly"] = cp;
    } else {
      l["charpoly"] = nullptr;
    }
    levels.push_back(l);
  }
  Json j;
  j["levels"] = levels;
  Json betti = Json::object();
  for (const auto& [k, b] : betti_of_case(p, n))
    betti[std::to_string(k)] = affine_to_json(b);
  j["betti"] = betti;
  if (p.lambda0) {
    Json c;
    c["lower_bound"] = p.lambda0->lower_bound;
    c["exact"] = p.lambda0->exact;
    c["excluded"] = p.lambda0->excluded;
    c["residual_trace"] = p.lambda0->residual_trace;
    j["lambda0"] = c;
  } else {
    j["lambda0"] = nullptr;
  }
  return j;
}

inline Json bounds_to_json(const BoundsReport& bounds) {
  Json arr = Json::array();
  for (size_t j = 0; j < bounds.size(); ++j)
    arr.push_back(Json{{"level", j},
                       {"lower_bound", bounds[j].lower_bound},
                       {"extremal", bounds[j].extremal}});
  return arr;
}

inline Json verification_to_json(const VerificationReport& report) {
  Json j;
  j["ok"] = report.ok();
  j["failures"] = report.failures;
  Json betti = Json::object();
  for (const auto& [k, b] : report.betti) betti[std::to_string(k)] = b;
  j["betti"] = betti;
  Json torsion = Json::object();
  for (const auto& [k, divisors] : report.torsion) {
    if (divisors.empty()) continue;
    Json arr = Json::array();
    for (const Integer& d : divisors) arr.push_back(integer_to_json(d));
    torsion[std::to_string(k)] = arr;
  }
  j["torsion"] = torsion;
  Json cps = Json::array();
  for (const IntPolynomial& cp : report.charpolys) cps.push_back(cp.str());
  j["charpolys"] = cps;
  return j;
}

inline Json inequalities_to_json(const std::vector<TorsionInequality>& ineqs) {
  Json arr = Json::array();
  for (const TorsionInequality& ineq : ineqs)
    arr.push_back(Json{{"level", ineq.level},
                       {"degree", ineq.degree},
                       {"torsion_degrees", ineq.torsion_degrees},
                       {"bound", ineq.bound}});
  return arr;
}

}  // namespace lemod
