#include "stablehom/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "stablehom/errors.hpp"

namespace stablehom {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

Polynomial Polynomial::from_integers(const std::vector<long>& ascending) {
  std::vector<Rational> c;
  for (long x : ascending) c.emplace_back(x);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

Polynomial Polynomial::reciprocal() const {
  std::vector<Rational> r(c_.rbegin(), c_.rend());
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Rational> out(std::max(c_.size(), rhs.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) + rhs.coefficient(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + rhs.scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Rational> out(c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  std::vector<Rational> out = c_;
  for (auto& x : out) x *= factor;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainMismatch("Polynomial::divide: division by zero");
  std::vector<Rational> rem = a.c_;
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> quot(a.c_.size() - b.c_.size() + 1);
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational f = rem[k + db] / b.c_.back();
    quot[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    const Rational mag = abs(c_[i]);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = Polynomial::divide(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  return Polynomial::divide(p, gcd(p, p.derivative())).first;
}

Polynomial characteristic_polynomial(const IntMatrix& a) {
  if (!a.square()) throw DomainMismatch("characteristic_polynomial: matrix is not square");
  const std::size_t n = a.rows();
  // c[n] = 1; M_k = a M_{k-1} + c[n-k+1] I; c[n-k] = -tr(a M_k) / k.
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    const IntMatrix am = a * m;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
  }
  std::vector<Rational> coeffs;
  for (const auto& x : c) coeffs.emplace_back(x);
  return Polynomial(std::move(coeffs));
}

namespace {

int sign_of(const Rational& x) { return sgn(x); }

std::size_t sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_of(p.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() <= 0 || lo >= hi) return 0;
  std::vector<Polynomial> chain{square_free_part(p)};
  chain.push_back(chain.front().derivative());
  while (chain.back().degree() > 0) {
    Polynomial r = Polynomial::divide(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(r.scaled(-1));
  }
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::size_t descartes_sign_changes(const Polynomial& p) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& c : p.coefficients()) {
    const int s = sign_of(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t roots_inside_unit_disc(const Polynomial& p) {
  const int deg = p.degree();
  if (deg <= 0) return 0;
  const std::size_t n = static_cast<std::size_t>(deg);
  // Clear denominators; a positive rescaling leaves the inertia unchanged.
  Integer common = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> a(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rational scaled = p.coefficient(i) * Rational(common);
    a[i] = scaled.get_num();
  }
  IntMatrix lower(n, n);
  IntMatrix upper(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      lower(i, j) = a[i - j];
      upper(i, j) = a[n - (i - j)];
    }
  }
  const IntMatrix s = upper.transpose() * upper - lower.transpose() * lower;
  // s is symmetric, so its characteristic polynomial has only real roots and
  // the sign rule counts positive eigenvalues exactly.
  return descartes_sign_changes(characteristic_polynomial(s));
}

}  // namespace stablehom
