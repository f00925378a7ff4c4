#include "heckelab/qcalc.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "heckelab/errors.hpp"

namespace heckelab {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::monomial(const Integer& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer QPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

const Integer& QPoly::leading() const {
  if (coeffs_.empty()) throw ArithmeticError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer QPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QPoly QPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return QPoly(std::move(v));
}

Integer QPoly::eval(const Integer& q0) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
  return acc;
}

Rational QPoly::eval(const Rational& q0) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + Rational(*it);
  acc.canonicalize();
  return acc;
}

QPoly QPoly::substitute_power(unsigned k) const {
  if (is_zero()) return {};
  if (k == 0) return QPoly(eval(Integer(1)));
  std::vector<Integer> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return QPoly(std::move(v));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(v));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly QPoly::exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw ArithmeticError("inexact polynomial division");
  std::vector<Integer> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  std::vector<Integer> quot(rem.size() - db);
  const Integer& lb = b.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw ArithmeticError("inexact polynomial division");
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs_[j];
    quot[k] = c;
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) throw ArithmeticError("inexact polynomial division");
  return QPoly(std::move(quot));
}

QPoly QPoly::pseudo_rem(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw ArithmeticError("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  const Integer& lb = b.leading();
  for (std::size_t top = rem.size(); top-- > db;) {
    const Integer c = rem[top];
    for (auto& x : rem) x *= lb;
    if (c == 0) continue;
    const std::size_t shift = top - db;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= c * b.coeffs_[j];
  }
  return QPoly(std::move(rem));
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  Integer cg;
  const Integer ca = a.content();
  const Integer cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  QPoly x = a.primitive_part();
  QPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  // primitive Euclidean PRS
  while (!y.is_zero()) {
    QPoly r = pseudo_rem(x, y);
    x = std::move(y);
    y = r.is_zero() ? QPoly{} : r.primitive_part();
  }
  QPoly g = x.primitive_part();
  for (auto& c : g.coeffs_) c *= cg;
  return g;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << "q";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

bool QPoly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------- QRat

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (g != QPoly(1)) {
    num_ = QPoly::exact_div(num_, g);
    den_ = QPoly::exact_div(den_, g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

const QPoly& QRat::as_polynomial() const {
  if (!is_polynomial()) throw ArithmeticError("not a polynomial: " + to_string());
  return num_;
}

Rational QRat::eval(const Integer& q0) const {
  Integer d = den_.eval(q0);
  if (d == 0) throw ArithmeticError("evaluation at a pole: q = " + q0.get_str());
  Rational r(num_.eval(q0), d);
  r.canonicalize();
  return r;
}

QRat& QRat::operator+=(const QRat& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat QRat::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero rational function");
  return QRat(den_, num_);
}

std::string QRat::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const QRat& r) { return os << r.to_string(); }

QRat qrat_arith(const QRat& a, const QRat& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw DomainError("unknown arithmetic operation");
}

// ---------------------------------------------------------------- counts

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

QPoly q_integer(unsigned n) {
  std::vector<Integer> v(n, Integer(1));
  return QPoly(std::move(v));
}

QPoly q_factorial(unsigned n) {
  QPoly r(1);
  for (unsigned j = 2; j <= n; ++j) r *= q_integer(j);
  return r;
}

QPoly gaussian_binomial(unsigned k, unsigned n) {
  if (k > n) throw DomainError("gaussian_binomial: k > n");
  // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), dividing as we go keeps every
  // partial product a Gaussian binomial (n choose i+1).
  QPoly acc(1);
  for (unsigned i = 0; i < k; ++i) {
    acc *= QPoly::monomial(1, n - i) - QPoly(1);
    acc = QPoly::exact_div(acc, QPoly::monomial(1, i + 1) - QPoly(1));
  }
  return acc;
}

Rational eval_at(const QPoly& p, const Integer& q0) { return Rational(p.eval(q0)); }

Rational eval_at(const QRat& r, const Integer& q0) { return r.eval(q0); }

}  // namespace heckelab
