#pragma once

// Exact arithmetic in Z[q] and its fraction field, plus q-combinatorial counts.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace heckelab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Polynomial in q with arbitrary-precision integer coefficients.
/// coeffs[i] is the coefficient of q^i; the highest stored coefficient is
/// never zero, so the zero polynomial has no coefficients at all.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor): constants promote
  QPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<Integer> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  /// c * q^k
  static QPoly monomial(const Integer& c, std::size_t k);
  /// q
  static QPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::size_t k) const;
  const Integer& leading() const;

  /// gcd of all coefficients, non-negative; 0 for the zero polynomial.
  Integer content() const;
  QPoly primitive_part() const;

  Integer eval(const Integer& q0) const;
  Rational eval(const Rational& q0) const;
  /// p(q^k) as a polynomial in q.
  QPoly substitute_power(unsigned k) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly operator-() const;

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  /// Quotient of an exact division in Z[q]; throws ArithmeticError if b does
  /// not divide a with integer coefficients.
  static QPoly exact_div(const QPoly& a, const QPoly& b);
  /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
  static QPoly pseudo_rem(const QPoly& a, const QPoly& b);
  /// gcd in Z[q], normalized to positive leading coefficient.
  static QPoly gcd(const QPoly& a, const QPoly& b);

  /// Pretty form like "q^2+q+1" (highest power first).
  std::string to_string() const;
  /// True iff every coefficient is >= 0.
  bool has_nonnegative_coeffs() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// Reduced ratio num/den of polynomials in q.  Invariants: den != 0,
/// gcd(num, den) = 1, leading coefficient of den positive, and the zero
/// value is stored as 0/1.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(QPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == QPoly(1); }
  /// The numerator when the denominator is 1; throws ArithmeticError otherwise.
  const QPoly& as_polynomial() const;

  Rational eval(const Integer& q0) const;

  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  QRat operator-() const;
  QRat inverse() const;

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

std::ostream& operator<<(std::ostream& os, const QRat& r);

enum class ArithOp { add, sub, mul, div };
QRat qrat_arith(const QRat& a, const QRat& b, ArithOp op);

/// (q^n - 1)/(q - 1) = 1 + q + ... + q^(n-1); [0] = 0.
QPoly q_integer(unsigned n);
/// [1][2]...[n]; [0]! = 1.
QPoly q_factorial(unsigned n);
/// Number of k-dimensional subspaces of F_q^n, as a polynomial in q.
/// Throws DomainError when k > n.
QPoly gaussian_binomial(unsigned k, unsigned n);

Rational eval_at(const QPoly& p, const Integer& q0);
/// Throws ArithmeticError at a pole.
Rational eval_at(const QRat& r, const Integer& q0);

Integer ipow(const Integer& base, unsigned long exp);

}  // namespace heckelab
