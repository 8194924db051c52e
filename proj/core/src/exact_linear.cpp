#include "stablehom/exact_linear.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "stablehom/errors.hpp"

namespace stablehom {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DomainMismatch("IntMatrix: entry count " + std::to_string(entries_.size()) +
                         " does not match shape " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Integer> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DomainMismatch("IntMatrix::from_rows: ragged rows");
    for (long value : row) entries.emplace_back(value);
  }
  return IntMatrix(r, c, std::move(entries));
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::column(std::size_t c) const { return columns(c, 1); }

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw DomainMismatch("IntMatrix::columns: out of range");
  IntMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

IntMatrix IntMatrix::rows_range(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw DomainMismatch("IntMatrix::rows_range: out of range");
  IntMatrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  return out;
}

IntMatrix IntMatrix::power(unsigned exponent) const {
  if (!square()) throw DomainMismatch("IntMatrix::power: matrix is not square");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw DomainMismatch("IntMatrix product: " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " times " + std::to_string(rhs.rows_) + "x" +
                         std::to_string(rhs.cols_));
  }
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  IntMatrix out = *this;
  out += rhs;
  return out;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DomainMismatch("IntMatrix sum: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const { return *this + (-rhs); }

IntMatrix IntMatrix::operator-() const { return scaled(Integer(-1)); }

IntMatrix IntMatrix::scaled(const Integer& factor) const {
  IntMatrix out = *this;
  for (auto& x : out.entries_) x *= factor;
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).get_str();
    }
  }
  os << ']';
  return os.str();
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(source, c) != 0) (*this)(target, c) += factor * (*this)(source, c);
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, source) != 0) (*this)(r, target) += factor * (*this)(r, source);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DomainMismatch("hstack: row counts differ");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DomainMismatch("vstack: column counts differ");
  IntMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r) out(a.rows() + r, c) = b(r, c);
  }
  return out;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw DomainMismatch("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer value = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = value;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// Carries the working matrix together with the accumulated transforms so the
// elementary operations below keep u * m * v = a at every step.
struct SmithState {
  IntMatrix a;
  IntMatrix u;
  IntMatrix u_inverse;
  IntMatrix v;
  IntMatrix v_inverse;

  void row_add(std::size_t target, std::size_t source, const Integer& q) {
    a.add_row_multiple(target, source, q);
    u.add_row_multiple(target, source, q);
    u_inverse.add_col_multiple(source, target, -q);
  }
  void col_add(std::size_t target, std::size_t source, const Integer& q) {
    a.add_col_multiple(target, source, q);
    v.add_col_multiple(target, source, q);
    v_inverse.add_row_multiple(source, target, -q);
  }
  void row_swap(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inverse.swap_cols(i, j);
  }
  void col_swap(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inverse.swap_rows(i, j);
  }
  void row_negate(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    u_inverse.negate_col(i);
  }
};

Integer truncated_quotient(const Integer& n, const Integer& d) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithState s{m, IntMatrix::identity(rows), IntMatrix::identity(rows), IntMatrix::identity(cols),
               IntMatrix::identity(cols)};
  std::size_t t = 0;
  const std::size_t limit = std::min(rows, cols);
  for (; t < limit; ++t) {
    // Minimal-absolute-value pivot over the trailing block.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (s.a(i, j) == 0) continue;
        if (pi == rows || abs(s.a(i, j)) < abs(s.a(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    s.row_swap(t, pi);
    s.col_swap(t, pj);

    for (;;) {
      bool clear = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.a(i, t) == 0) continue;
        s.row_add(i, t, -truncated_quotient(s.a(i, t), s.a(t, t)));
        if (s.a(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.a(t, j) == 0) continue;
        s.col_add(j, t, -truncated_quotient(s.a(t, j), s.a(t, t)));
        if (s.a(t, j) != 0) clear = false;
      }
      if (!clear) {
        // A smaller remainder appeared in the pivot row or column; promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (s.a(i, t) != 0 && abs(s.a(i, t)) < abs(s.a(bi, bj))) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s.a(t, j) != 0 && abs(s.a(t, j)) < abs(s.a(bi, bj))) { bi = t; bj = j; }
        s.row_swap(t, bi);
        s.col_swap(t, bj);
        continue;
      }
      // Pivot must divide the whole trailing block for the divisibility chain.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(s.a(i, j).get_mpz_t(), s.a(t, t).get_mpz_t())) {
            s.row_add(t, i, Integer(1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (s.a(t, t) < 0) s.row_negate(t);
  }
  SmithForm out{std::move(s.u), std::move(s.a), std::move(s.v), std::move(s.u_inverse),
                std::move(s.v_inverse), t};
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  return snf.v.columns(snf.rank, m.cols() - snf.rank);
}

std::size_t rank(const IntMatrix& m) {
  // Fraction-free row echelon form; independent of the Smith routine so the
  // two can be checked against each other.
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Integer factor = a(i, c);
      const Integer pivot = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * pivot - a(r, j) * factor;
      // Remove the common content to keep entries small.
      Integer g = 0;
      for (std::size_t j = c; j < a.cols(); ++j) g = gcd(g, a(i, j));
      if (g > 1)
        for (std::size_t j = c; j < a.cols(); ++j)
          mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), g.get_mpz_t());
    }
    ++r;
  }
  return r;
}

LatticeSolver::LatticeSolver(const IntMatrix& a) : a_(a), snf_(smith_normal_form(a)) {}

std::optional<IntMatrix> LatticeSolver::solve(const IntMatrix& b) const {
  if (a_.rows() != b.rows()) throw DomainMismatch("LatticeSolver: row counts differ");
  const IntMatrix ub = snf_.u * b;
  IntMatrix y(a_.cols(), b.cols());
  for (std::size_t k = 0; k < b.cols(); ++k) {
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      if (i < snf_.rank) {
        const Integer& di = snf_.d(i, i);
        if (!mpz_divisible_p(ub(i, k).get_mpz_t(), di.get_mpz_t())) return std::nullopt;
        Integer q;
        mpz_divexact(q.get_mpz_t(), ub(i, k).get_mpz_t(), di.get_mpz_t());
        y(i, k) = q;
      } else if (ub(i, k) != 0) {
        return std::nullopt;
      }
    }
  }
  return snf_.v * y;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  return LatticeSolver(a).solve(b);
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  const SmithForm snf = smith_normal_form(generators);
  IntMatrix out(generators.rows(), snf.rank);
  for (std::size_t c = 0; c < snf.rank; ++c)
    for (std::size_t r = 0; r < generators.rows(); ++r)
      out(r, c) = snf.u_inverse(r, c) * snf.d(c, c);
  return out;
}

}  // namespace stablehom
