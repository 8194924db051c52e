#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "stablehom/errors.hpp"
#include "stablehom/polynomial.hpp"
#include "test_support.hpp"

using namespace stablehom;

namespace {

Polynomial poly(const std::vector<long>& ascending) { return Polynomial::from_integers(ascending); }

// Product of (x - r) over integer roots.
Polynomial from_roots(const std::vector<long>& roots) {
  Polynomial out = poly({1});
  for (long r : roots) out = out * poly({-r, 1});
  return out;
}

// Roots by Durand-Kerner in floating point; only used as an oracle.
std::vector<std::complex<double>> numeric_roots(const Polynomial& p) {
  const Polynomial m = p.monic();
  const int n = m.degree();
  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::pow(std::complex<double>(0.4, 0.9), i);
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * x + m.coefficient(i).get_d();
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    for (int i = 0; i < n; ++i) {
      std::complex<double> denom = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      z[i] -= eval(z[i]) / denom;
    }
  }
  return z;
}

}  // namespace

TEST(Polynomial, Arithmetic) {
  const Polynomial p = poly({1, 2, 3});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(p.evaluate(2), 17);
  EXPECT_EQ(p.derivative(), poly({2, 6}));
  EXPECT_EQ(p.reciprocal(), poly({3, 2, 1}));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(poly({-1, 1}) * poly({1, 1}), poly({-1, 0, 1}));
  const auto [q, r] = Polynomial::divide(poly({-1, 0, 1}), poly({-1, 1}));
  EXPECT_EQ(q, poly({1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(Polynomial::divide(p, Polynomial()), DomainMismatch);
}

TEST(Polynomial, DivisionProperty) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> coeff(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long> a(std::uniform_int_distribution<std::size_t>(1, 6)(rng));
    std::vector<long> b(std::uniform_int_distribution<std::size_t>(1, 4)(rng));
    for (auto& c : a) c = coeff(rng);
    for (auto& c : b) c = coeff(rng);
    b.back() = b.back() == 0 ? 1 : b.back();
    const auto [q, r] = Polynomial::divide(poly(a), poly(b));
    ASSERT_EQ(q * poly(b) + r, poly(a));
    ASSERT_LT(r.degree(), poly(b).degree());
  }
}

TEST(Polynomial, Gcd) {
  EXPECT_EQ(gcd(from_roots({1, 2, 2}), from_roots({2, 3})), from_roots({2}));
  EXPECT_EQ(gcd(poly({2, 2}), poly({3})), poly({1}));
  EXPECT_TRUE(gcd(Polynomial(), Polynomial()).is_zero());
  EXPECT_EQ(square_free_part(from_roots({1, 1, 1, -2})), from_roots({1, -2}));
}

TEST(Polynomial, CharacteristicPolynomial) {
  EXPECT_EQ(characteristic_polynomial(IntMatrix::from_rows({{2, 1}, {1, 1}})), poly({1, -3, 1}));
  EXPECT_EQ(characteristic_polynomial(IntMatrix::identity(3)), from_roots({1, 1, 1}));
  EXPECT_EQ(characteristic_polynomial(IntMatrix()), poly({1}));
}

TEST(Polynomial, CharacteristicPolynomialProperty) {
  // Oracle: p(k) = det(k I - A) evaluated by the determinant routine.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const IntMatrix a = stablehom::testing::random_matrix(rng, n, n, -4, 4);
    const Polynomial p = characteristic_polynomial(a);
    ASSERT_EQ(p.degree(), static_cast<int>(n));
    for (long k = -3; k <= 3; ++k) {
      const IntMatrix shifted = IntMatrix::identity(n).scaled(k) - a;
      ASSERT_EQ(p.evaluate(k), Rational(determinant(shifted)));
    }
  }
}

TEST(Polynomial, SturmCount) {
  const Polynomial p = from_roots({-2, 0, 1, 1, 3});
  EXPECT_EQ(sturm_count(p, -2, 2), 2u);  // 0 and 1; -2 is excluded
  EXPECT_EQ(sturm_count(p, -3, -2), 1u);
  EXPECT_EQ(sturm_count(p, -10, 10), 4u);
  EXPECT_EQ(sturm_count(poly({1, 0, 1}), -10, 10), 0u);
}

TEST(Polynomial, DescartesSignChanges) {
  EXPECT_EQ(descartes_sign_changes(from_roots({1, 2, -3})), 2u);
  EXPECT_EQ(descartes_sign_changes(poly({1, 0, 0, 1})), 0u);
  EXPECT_EQ(descartes_sign_changes(poly({-1, 0, 1})), 1u);
}

TEST(Polynomial, RootsInsideUnitDisc) {
  EXPECT_EQ(roots_inside_unit_disc(poly({3, -7, 2})), 1u);  // roots 3 and 1/2
  EXPECT_EQ(roots_inside_unit_disc(poly({-1, -1, 0, 1})), 2u);  // x^3 - x - 1
  EXPECT_EQ(roots_inside_unit_disc(poly({4, 0, 1})), 0u);
  EXPECT_EQ(roots_inside_unit_disc(poly({1, 0, 4})), 2u);
}

TEST(Polynomial, RootsInsideUnitDiscProperty) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> coeff(-6, 6);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 120; ++trial) {
    std::vector<long> c(std::uniform_int_distribution<std::size_t>(2, 6)(rng));
    for (auto& x : c) x = coeff(rng);
    if (c.back() == 0 || c.front() == 0) continue;
    const Polynomial p = poly(c);
    const auto roots = numeric_roots(p);
    // Skip inputs outside the precondition or too close to call numerically.
    bool ambiguous = false;
    std::size_t inside = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (std::abs(std::abs(roots[i]) - 1.0) < 1e-6) ambiguous = true;
      for (std::size_t j = 0; j < roots.size(); ++j)
        if (std::abs(roots[i] * std::conj(roots[j]) - 1.0) < 1e-6) ambiguous = true;
      if (std::abs(roots[i]) < 1.0) ++inside;
    }
    if (ambiguous) continue;
    ++checked;
    ASSERT_EQ(roots_inside_unit_disc(p), inside) << p.to_string();
  }
  EXPECT_GE(checked, 50);
}
