#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lemod/integer.hpp"

namespace lemod {

// Dense univariate integer polynomial in t, constant coefficient first.
// The zero polynomial is the empty coefficient vector; no trailing zeros
// are kept, so degree() is always the honest degree (-1 for zero).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial one() { return IntPolynomial({Integer(1)}); }

  // t^d - 1, the polynomial whose roots are the d-th roots of unity.
  static IntPolynomial t_power_minus_one(Int d) {
    std::vector<Integer> c(static_cast<size_t>(d) + 1);
    c[0] = -1;
    c[static_cast<size_t>(d)] = 1;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  Int degree() const { return static_cast<Int>(c_.size()) - 1; }

  bool monic() const { return !c_.empty() && c_.back() == 1; }

  const std::vector<Integer>& coeffs() const { return c_; }

  Integer coeff(Int k) const {
    if (k < 0 || k >= static_cast<Int>(c_.size())) return Integer(0);
    return c_[static_cast<size_t>(k)];
  }

  // Sum of roots of a monic polynomial: -(coefficient of t^{deg-1}).
  Integer trace() const {
    if (degree() < 1) return Integer(0);
    return -c_[static_cast<size_t>(degree() - 1)];
  }

  bool operator==(const IntPolynomial& o) const = default;

  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Integer> prod(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(prod));
  }

  IntPolynomial pow(Int e) const {
    IntPolynomial result = one();
    for (Int i = 0; i < e; ++i) result = result * *this;
    return result;
  }

  // Long division by a monic divisor; integral by construction.
  static void divmod_monic(const IntPolynomial& num, const IntPolynomial& den,
                           IntPolynomial* quotient, IntPolynomial* remainder) {
    if (!den.monic())
      throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<Integer> rem = num.c_;
    std::vector<Integer> quo;
    const Int dd = den.degree();
    if (num.degree() >= dd)
      quo.assign(static_cast<size_t>(num.degree() - dd) + 1, Integer(0));
    for (Int k = num.degree(); k >= dd; --k) {
      Integer lead = rem[static_cast<size_t>(k)];
      if (lead == 0) continue;
      quo[static_cast<size_t>(k - dd)] = lead;
      for (Int i = 0; i <= dd; ++i)
        rem[static_cast<size_t>(k - dd + i)] -=
            lead * den.c_[static_cast<size_t>(i)];
    }
    if (quotient) *quotient = IntPolynomial(std::move(quo));
    if (remainder) *remainder = IntPolynomial(std::move(rem));
  }

  // Exact division; throws if the divisor does not divide exactly.
  IntPolynomial divide_exact(const IntPolynomial& den) const {
    IntPolynomial q, r;
    divmod_monic(*this, den, &q, &r);
    if (!r.is_zero())
      throw std::invalid_argument("divide_exact: nonzero remainder");
    return q;
  }

  bool divisible_by(const IntPolynomial& den) const {
    IntPolynomial r;
    divmod_monic(*this, den, nullptr, &r);
    return r.is_zero();
  }

  // ASCII rendering, highest power first: "t^2 - 2t + 1".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (Int k = degree(); k >= 0; --k) {
      const Integer& c = c_[static_cast<size_t>(k)];
      if (c == 0) continue;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (k == 0) {
        out << mag;
      } else {
        if (mag != 1) out << mag;
        out << "t";
        if (k > 1) out << "^" << k;
      }
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

}  // namespace lemod
