#include "smallcheck/int_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace smallcheck {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_)
    throw std::invalid_argument("IntMatrix: entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long x : r) e_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

bool IntMatrix::is_zero() const {
  for (const Int& x : e_)
    if (x != 0) return false;
  return true;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m.at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      m.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        // exact by the Bareiss invariant
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

namespace {

// Index of the entry with smallest nonzero absolute value in the trailing
// submatrix starting at (s, s); false if that submatrix is zero.
bool locate_pivot(const IntMatrix& m, std::size_t s, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = s; i < m.rows(); ++i)
    for (std::size_t j = s; j < m.cols(); ++j) {
      const Int& x = m.at(i, j);
      if (x == 0) continue;
      Int a = int_abs(x);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

bool row_col_cleared(const IntMatrix& m, std::size_t s) {
  for (std::size_t i = s + 1; i < m.rows(); ++i)
    if (m.at(i, s) != 0) return false;
  for (std::size_t j = s + 1; j < m.cols(); ++j)
    if (m.at(s, j) != 0) return false;
  return true;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  SnfResult r{IntMatrix::identity(rows), a, IntMatrix::identity(cols)};
  IntMatrix& s = r.s;
  IntMatrix& u = r.u;
  IntMatrix& v = r.v;

  const std::size_t nmin = std::min(rows, cols);
  for (std::size_t k = 0; k < nmin; ++k) {
    std::size_t pi = k, pj = k;
    if (!locate_pivot(s, k, pi, pj)) break;  // trailing block all zero
    s.swap_rows(k, pi);
    u.swap_rows(k, pi);
    s.swap_cols(k, pj);
    v.swap_cols(k, pj);

    while (true) {
      // Clear column k below the pivot, always keeping the smallest
      // remainder at the pivot to bound entry growth.
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (s.at(i, k) == 0) continue;
        Int q = s.at(i, k) / s.at(k, k);
        s.add_row_multiple(i, k, -q);
        u.add_row_multiple(i, k, -q);
        if (s.at(i, k) != 0) {
          s.swap_rows(k, i);
          u.swap_rows(k, i);
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (s.at(k, j) == 0) continue;
        Int q = s.at(k, j) / s.at(k, k);
        s.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
        if (s.at(k, j) != 0) {
          s.swap_cols(k, j);
          v.swap_cols(k, j);
        }
      }
      if (!row_col_cleared(s, k)) continue;

      // Pivot must divide the whole trailing block for the chain property;
      // fold an offending row into row k and restart the elimination.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < rows && divides_all; ++i)
        for (std::size_t j = k + 1; j < cols && divides_all; ++j)
          if (s.at(i, j) % s.at(k, k) != 0) {
            s.add_row_multiple(k, i, 1);
            u.add_row_multiple(k, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }

    if (s.at(k, k) < 0) {
      s.negate_row(k);
      u.negate_row(k);
    }
  }
  return r;
}

std::vector<Int> elementary_divisors(const IntMatrix& a) {
  SnfResult r = smith_normal_form(a);
  std::vector<Int> d;
  for (std::size_t k = 0; k < std::min(a.rows(), a.cols()); ++k) {
    if (r.s.at(k, k) == 0) break;
    d.push_back(r.s.at(k, k));
  }
  return d;
}

}  // namespace smallcheck
