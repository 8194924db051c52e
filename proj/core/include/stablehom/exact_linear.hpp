#pragma once

// Dense integer matrices over arbitrary-precision integers, with the
// Smith normal form and the lattice operations derived from it.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace stablehom {

using Integer = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);

  static IntMatrix identity(std::size_t n);
  /// Row-major literal, e.g. `IntMatrix::from_rows({{2, 4}, {6, 8}})`.
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix diagonal(const std::vector<Integer>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  IntMatrix transpose() const;
  IntMatrix column(std::size_t c) const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix rows_range(std::size_t first, std::size_t count) const;
  IntMatrix power(unsigned exponent) const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& rhs);
  IntMatrix scaled(const Integer& factor) const;
  bool operator==(const IntMatrix& rhs) const = default;

  std::string to_string() const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// [a | b]
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// [a ; b]
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Fraction-free (Bareiss) determinant. Requires a square matrix.
Integer determinant(const IntMatrix& m);

/// u * m * v = d with u, v unimodular and d = diag(d1, d2, ...), d1 | d2 | ...,
/// all di >= 0. The inverses of u and v are tracked alongside.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inverse;
  IntMatrix v_inverse;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Saturated basis (as columns) of the integer null space of m.
IntMatrix kernel_basis(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Some integer x with a * x = b, or nullopt when no integer solution exists.
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/// Reusable integer solver for a fixed coefficient matrix.
class LatticeSolver {
 public:
  explicit LatticeSolver(const IntMatrix& a);
  std::optional<IntMatrix> solve(const IntMatrix& b) const;
  const IntMatrix& matrix() const noexcept { return a_; }

 private:
  IntMatrix a_;
  SmithForm snf_;
};

/// Linearly independent columns spanning the same lattice as the columns of
/// `generators` (rows x rank).
IntMatrix lattice_basis(const IntMatrix& generators);

}  // namespace stablehom
