#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "smallcheck/integers.hpp"

namespace smallcheck {

/// Dense integer matrix with exact entries, row-major storage.
/// Empty shapes (0 x n, n x 0) are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const std::vector<Int>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix operator*(const IntMatrix& o) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += c * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
  /// col i += c * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& c);
  void negate_row(std::size_t i);

  bool is_zero() const;

  /// Exact determinant (square only), fraction-free Bareiss elimination.
  Int determinant() const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> e_;
};

/// u * a * v = s with u, v unimodular and s diagonal, nonnegative,
/// each diagonal entry dividing the next nonzero one.
struct SnfResult {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// The nonzero diagonal of the Smith form, in chain order.
std::vector<Int> elementary_divisors(const IntMatrix& a);

}  // namespace smallcheck
