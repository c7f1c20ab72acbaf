#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lemod/integer.hpp"
#include "lemod/polynomial.hpp"

namespace lemod {

// Dense matrix over the integers, row-major. All arithmetic is exact.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(Int rows, Int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("IntMatrix: negative dimension");
  }

  static IntMatrix identity(Int k) {
    IntMatrix m(k, k);
    for (Int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
  }

  Int rows() const { return rows_; }
  Int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& at(Int i, Int j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
  const Integer& at(Int i, Int j) const {
    return a_[static_cast<size_t>(i * cols_ + j)];
  }

  bool operator==(const IntMatrix&) const = default;

  bool is_zero() const {
    for (const Integer& v : a_)
      if (v != 0) return false;
    return true;
  }

  Integer trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: square only");
    Integer t = 0;
    for (Int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("operator*: dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (Int i = 0; i < a.rows_; ++i)
      for (Int k = 0; k < a.cols_; ++k) {
        const Integer& aik = a.at(i, k);
        if (aik == 0) continue;
        for (Int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("operator+: dimension mismatch");
    IntMatrix c = a;
    for (size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
  }

  std::string str() const {
    std::ostringstream out;
    out << "[";
    for (Int i = 0; i < rows_; ++i) {
      if (i) out << ",";
      out << "[";
      for (Int j = 0; j < cols_; ++j) {
        if (j) out << ",";
        out << at(i, j);
      }
      out << "]";
    }
    out << "]";
    return out.str();
  }

 private:
  Int rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

// Determinant by Bareiss fraction-free elimination; det of the 0x0 matrix is 1.
inline Integer det(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square only");
  const Int k = m.rows();
  Integer prev = 1;
  Int sign = 1;
  for (Int t = 0; t < k; ++t) {
    Int pivot = -1;
    for (Int i = t; i < k; ++i)
      if (m.at(i, t) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Integer(0);
    if (pivot != t) {
      for (Int j = 0; j < k; ++j) std::swap(m.at(pivot, j), m.at(t, j));
      sign = -sign;
    }
    for (Int i = t + 1; i < k; ++i) {
      for (Int j = t + 1; j < k; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(t, t) - m.at(i, t) * m.at(t, j)) / prev;
      m.at(i, t) = 0;
    }
    prev = m.at(t, t);
  }
  return k == 0 ? Integer(1) : Integer(sign * m.at(k - 1, k - 1));
}

// Rank over the rationals by gcd-scaled integer elimination.
inline Int rank_rational(IntMatrix m) {
  Int rank = 0;
  for (Int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Int pivot = -1;
    for (Int i = rank; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (Int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    for (Int i = rank + 1; i < m.rows(); ++i) {
      if (m.at(i, c) == 0) continue;
      Integer a = m.at(rank, c), b = m.at(i, c);
      Integer g = boost::multiprecision::gcd(a, b);
      a /= g;
      b /= g;
      for (Int j = 0; j < m.cols(); ++j)
        m.at(i, j) = a * m.at(i, j) - b * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

namespace detail {

// Diagonalization over Z by row/column operations. Mirrors the column
// operations on *col_ops when a kernel basis is wanted.
inline std::vector<Integer> smith_impl(IntMatrix& m, IntMatrix* col_ops) {
  const Int rows = m.rows(), cols = m.cols();
  if (col_ops) *col_ops = IntMatrix::identity(cols);

  auto swap_rows = [&](Int a, Int b) {
    for (Int j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
  };
  auto swap_cols = [&](Int a, Int b) {
    for (Int i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    if (col_ops)
      for (Int i = 0; i < cols; ++i)
        std::swap(col_ops->at(i, a), col_ops->at(i, b));
  };
  auto add_row = [&](Int dst, Int src, const Integer& f) {
    for (Int j = 0; j < cols; ++j) m.at(dst, j) += f * m.at(src, j);
  };
  auto add_col = [&](Int dst, Int src, const Integer& f) {
    for (Int i = 0; i < rows; ++i) m.at(i, dst) += f * m.at(i, src);
    if (col_ops)
      for (Int i = 0; i < cols; ++i)
        col_ops->at(i, dst) += f * col_ops->at(i, src);
  };

  std::vector<Integer> divisors;
  const Int steps = std::min(rows, cols);
  for (Int t = 0; t < steps; ++t) {
    // smallest nonzero entry of the trailing submatrix becomes the pivot
    Int pi = -1, pj = -1;
    for (Int i = t; i < rows; ++i)
      for (Int j = t; j < cols; ++j) {
        const Integer& v = m.at(i, j);
        if (v == 0) continue;
        if (pi < 0 || boost::multiprecision::abs(v) <
                          boost::multiprecision::abs(m.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    for (;;) {
      bool clean = true;
      for (Int i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Integer q = m.at(i, t) / m.at(t, t);
        add_row(i, t, -q);
        if (m.at(i, t) != 0) {  // remainder strictly smaller: promote it
          swap_rows(i, t);
          clean = false;
        }
      }
      if (!clean) continue;
      for (Int j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Integer q = m.at(t, j) / m.at(t, t);
        add_col(j, t, -q);
        if (m.at(t, j) != 0) {
          swap_cols(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the submatrix for the chain property
      bool divides = true;
      for (Int i = t + 1; i < rows && divides; ++i)
        for (Int j = t + 1; j < cols && divides; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    divisors.push_back(boost::multiprecision::abs(m.at(t, t)));
  }
  return divisors;
}

}  // namespace detail

// Nonzero elementary divisors d_1 | d_2 | ... of the matrix; their count is
// the rank, entries > 1 describe the torsion of coker restricted to im.
inline std::vector<Integer> smith_divisors(IntMatrix m) {
  return detail::smith_impl(m, nullptr);
}

// Columns form a basis of the integer kernel.
inline IntMatrix integer_kernel_basis(IntMatrix m) {
  const Int cols = m.cols();
  IntMatrix v;
  std::vector<Integer> div = detail::smith_impl(m, &v);
  const Int rank = static_cast<Int>(div.size());
  IntMatrix kernel(cols, cols - rank);
  for (Int i = 0; i < cols; ++i)
    for (Int j = rank; j < cols; ++j) kernel.at(i, j - rank) = v.at(i, j);
  return kernel;
}

// Characteristic polynomial det(tI - A) by the Faddeev-LeVerrier recursion;
// every division is exact over Z.
inline IntPolynomial charpoly(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: square only");
  const Int m = a.rows();
  std::vector<Integer> coeffs(static_cast<size_t>(m) + 1);
  coeffs[static_cast<size_t>(m)] = 1;
  IntMatrix mk = IntMatrix::identity(m);
  Integer ck;
  for (Int k = 1; k <= m; ++k) {
    if (k > 1) {
      IntMatrix ckI(m, m);
      for (Int i = 0; i < m; ++i) ckI.at(i, i) = ck;
      mk = a * mk + ckI;
    }
    Integer tr = (a * mk).trace();
    if (tr % k != 0) throw std::logic_error("charpoly: inexact division");
    ck = -tr / k;
    coeffs[static_cast<size_t>(m - k)] = ck;
  }
  return IntPolynomial(std::move(coeffs));
}

// Rank over the field with p elements.
inline Int rank_mod_p(const IntMatrix& m, Int p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: p must be prime");
  const Int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Int>> a(static_cast<size_t>(rows),
                                  std::vector<Int>(static_cast<size_t>(cols)));
  for (Int i = 0; i < rows; ++i)
    for (Int j = 0; j < cols; ++j) {
      Integer r = m.at(i, j) % p;
      if (r < 0) r += p;
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          static_cast<Int>(r);
    }
  auto inv_mod = [&](Int x) {
    Int result = 1, base = x % p, e = p - 2;  // Fermat; p prime
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  Int rank = 0;
  for (Int c = 0; c < cols && rank < rows; ++c) {
    Int pivot = -1;
    for (Int i = rank; i < rows; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(rank)]);
    Int inv = inv_mod(a[static_cast<size_t>(rank)][static_cast<size_t>(c)]);
    for (Int i = rank + 1; i < rows; ++i) {
      Int f = a[static_cast<size_t>(i)][static_cast<size_t>(c)] * inv % p;
      if (f == 0) continue;
      for (Int j = c; j < cols; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            ((a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
              f * a[static_cast<size_t>(rank)][static_cast<size_t>(j)]) % p +
             p) %
            p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace lemod
