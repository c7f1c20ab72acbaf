#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lemod/error.hpp"
#include "lemod/integer.hpp"

namespace lemod {

// User-asserted constraints imported from outside the trace calculus.
// They are never derived; the scenario simply records them.
enum class Flag {
  sigma_lci,                  // critical locus is a set-theoretic LCI
  swing,                      // s = 1: lambda^0 = 0 or the bottom differential
                              // is nonzero integrally and mod every prime
  top_differential_nonzero,   // the top differential of the complex is nonzero
};

inline const char* flag_name(Flag f) {
  switch (f) {
    case Flag::sigma_lci: return "sigma_lci";
    case Flag::swing: return "swing";
    case Flag::top_differential_nonzero: return "top_differential_nonzero";
  }
  return "?";
}

inline std::optional<Flag> flag_from_name(const std::string& name) {
  if (name == "sigma_lci") return Flag::sigma_lci;
  if (name == "swing") return Flag::swing;
  if (name == "top_differential_nonzero") return Flag::top_differential_nonzero;
  return std::nullopt;
}

// How the Euler characteristics of the links of the critical locus arise.
struct LinkModel {
  enum class Kind { smooth, branch_curve, cone_a1, explicit_chis };

  Kind kind = Kind::smooth;
  Int branches = 0;        // branch_curve only
  std::vector<Int> chis;   // explicit_chis only

  static LinkModel smooth() { return {}; }
  static LinkModel branch_curve(Int r) {
    LinkModel m;
    m.kind = Kind::branch_curve;
    m.branches = r;
    return m;
  }
  static LinkModel cone_a1() {
    LinkModel m;
    m.kind = Kind::cone_a1;
    return m;
  }
  static LinkModel explicit_chis(std::vector<Int> chis) {
    LinkModel m;
    m.kind = Kind::explicit_chis;
    m.chis = std::move(chis);
    return m;
  }

  bool operator==(const LinkModel&) const = default;

  std::string str() const {
    switch (kind) {
      case Kind::smooth: return "smooth";
      case Kind::branch_curve: {
        std::ostringstream out;
        out << "branch_curve(" << branches << ")";
        return out.str();
      }
      case Kind::cone_a1: return "cone_a1";
      case Kind::explicit_chis: return "explicit";
    }
    return "?";
  }
};

// chi(L^0), ..., chi(L^s) for the model. The top link is the contractible
// cone germ of the critical locus itself, so chi(L^s) = 1 always.
inline std::vector<Int> link_chis_from_model(const LinkModel& model, Int s) {
  if (s < 0) throw Error(Errc::model_mismatch, "s must be >= 0");
  switch (model.kind) {
    case LinkModel::Kind::smooth:
      // every slice of a smooth germ is contractible
      return std::vector<Int>(static_cast<size_t>(s) + 1, 1);
    case LinkModel::Kind::branch_curve:
      if (s != 1)
        throw Error(Errc::model_mismatch, "branch_curve requires s = 1");
      if (model.branches < 1)
        throw Error(Errc::model_mismatch, "branch_curve needs >= 1 branch");
      return {model.branches, 1};
    case LinkModel::Kind::cone_a1:
      if (s != 2) throw Error(Errc::model_mismatch, "cone_a1 requires s = 2");
      // L^1 is the Milnor fibre of a plane node (a circle), L^0 two points
      return {2, 0, 1};
    case LinkModel::Kind::explicit_chis:
      if (static_cast<Int>(model.chis.size()) != s + 1)
        throw Error(Errc::model_mismatch,
                    "explicit link data must list s+1 Euler characteristics");
      if (model.chis.back() != 1)
        throw Error(Errc::link_error, "chi(L^s) must be 1");
      return model.chis;
  }
  throw Error(Errc::model_mismatch, "unknown link model");
}

// Unknown entries stay symbolic; only level 0 may remain symbolic downstream.
using LeNumber = std::optional<Int>;

// The topological input: dimensions, link Euler characteristics, the
// (possibly unknown) ranks of the modules in the complex, and assertion
// flags. Immutable after validation.
struct Scenario {
  Int n = 0;  // ambient dimension index: f is defined on an open set in C^{n+1}
  Int s = 0;  // dimension of the critical locus at the origin
  LinkModel link_model;
  std::vector<Int> link_chis;      // chi(L^0..L^s), size s+1
  std::vector<LeNumber> le_numbers;  // lambda^0..lambda^s, size s+1
  std::set<Flag> flags;

  bool has_flag(Flag f) const { return flags.count(f) > 0; }

  bool operator==(const Scenario&) const = default;
};

inline Scenario validate_scenario(Scenario raw) {
  if (raw.n < 0 || raw.s < 0)
    throw Error(Errc::dimension_error, "n and s must be >= 0");
  if (raw.s > raw.n) throw Error(Errc::dimension_error, "s must be <= n");
  if (static_cast<Int>(raw.link_chis.size()) != raw.s + 1)
    throw Error(Errc::dimension_error, "link_chis must have length s+1");
  if (static_cast<Int>(raw.le_numbers.size()) != raw.s + 1)
    throw Error(Errc::dimension_error, "le_numbers must have length s+1");
  if (raw.link_chis.back() != 1)
    throw Error(Errc::link_error, "chi(L^s) must be 1");
  for (const LeNumber& le : raw.le_numbers)
    if (le && *le < 0)
      throw Error(Errc::negative_le_number, "Le numbers must be >= 0");
  return raw;
}

// Convenience constructor: derives the link data from the model, fills
// missing Le numbers with unknowns, and validates.
inline Scenario make_scenario(Int n, Int s, LinkModel model,
                              std::vector<LeNumber> le_numbers = {},
                              std::set<Flag> flags = {}) {
  Scenario sc;
  sc.n = n;
  sc.s = s;
  sc.link_model = model;
  sc.link_chis = link_chis_from_model(model, s);
  if (le_numbers.empty())
    le_numbers.assign(static_cast<size_t>(s) + 1, std::nullopt);
  sc.le_numbers = std::move(le_numbers);
  sc.flags = std::move(flags);
  return validate_scenario(std::move(sc));
}

}  // namespace lemod
