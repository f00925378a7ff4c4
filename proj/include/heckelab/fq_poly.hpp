#pragma once

// Univariate polynomials over a prime field F_p, small p.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace heckelab {

bool is_prime(std::uint32_t n);

class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(std::uint32_t p) : p_(p) {}
  /// Coefficients little-endian; reduced mod p (negative values allowed).
  FqPoly(std::uint32_t p, const std::vector<long>& coeffs);

  static FqPoly constant(std::uint32_t p, long c) { return FqPoly(p, std::vector<long>{c}); }
  static FqPoly monomial(std::uint32_t p, std::uint32_t c, unsigned k);

  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint32_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  FqPoly& operator+=(const FqPoly& o);
  FqPoly& operator-=(const FqPoly& o);
  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  FqPoly scaled(std::uint32_t s) const;
  FqPoly operator-() const { return scaled(p_ - 1); }
  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator!=(const FqPoly& a, const FqPoly& b) { return !(a == b); }

  /// Euclidean division; throws ArithmeticError on division by zero.
  static std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
  static FqPoly gcd(FqPoly a, FqPoly b);  // monic, or zero
  FqPoly monic() const;

  /// Little-endian coefficient list as plain integers.
  std::vector<long> to_vector() const;
  /// Pretty form in the affine coordinate t.
  std::string to_string() const;

  std::uint32_t inv(std::uint32_t a) const;

 private:
  void trim();
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const FqPoly& f);

/// Invoke fn(poly) for each polynomial of degree <= max_deg (all coefficient
/// vectors of length max_deg+1, including zero); max_deg < 0 yields only zero.
template <typename Fn>
void for_each_poly_upto(std::uint32_t p, int max_deg, Fn&& fn) {
  if (max_deg < 0) {
    fn(FqPoly(p));
    return;
  }
  std::vector<long> c(static_cast<std::size_t>(max_deg) + 1, 0);
  while (true) {
    fn(FqPoly(p, c));
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == static_cast<long>(p)) c[i++] = 0;
    if (i == c.size()) break;
  }
}

}  // namespace heckelab
