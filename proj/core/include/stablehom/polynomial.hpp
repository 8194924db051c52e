#pragma once

// Univariate polynomials over the rationals, with the exact root-location
// tools used by the toral analysis: gcd, Sturm sequences and Descartes'
// rule of signs.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "stablehom/exact_linear.hpp"

namespace stablehom {

using Rational = mpq_class;

class Polynomial {
 public:
  Polynomial() = default;
  /// Ascending coefficients: c[0] + c[1] x + ...
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial from_integers(const std::vector<long>& ascending);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational evaluate(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  /// x^deg p(1/x).
  Polynomial reciprocal() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(const Rational& factor) const;
  bool operator==(const Polynomial& rhs) const { return c_ == rhs.c_; }

  /// Quotient and remainder; throws DomainMismatch on division by zero.
  static std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero when both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial square_free_part(const Polynomial& p);

/// det(x I - a), computed exactly by the Faddeev-LeVerrier recursion.
Polynomial characteristic_polynomial(const IntMatrix& a);

/// Number of distinct real roots of p in the half-open interval (lo, hi].
std::size_t sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Sign changes in the coefficient sequence (zeros skipped). For a
/// polynomial with only real roots this is exactly the number of positive
/// roots counted with multiplicity.
std::size_t descartes_sign_changes(const Polynomial& p);

/// Number of roots (with multiplicity) strictly inside the unit disc, for a
/// polynomial with no root on the unit circle and no pair of roots lambda,
/// 1/conj(lambda). Uses the inertia of the Schur-Cohn matrix.
std::size_t roots_inside_unit_disc(const Polynomial& p);

}  // namespace stablehom
