#pragma once

// Splitting types O(d_1) + ... + O(d_n) on P^1 and closed points.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/fq_poly.hpp"
#include "heckelab/qcalc.hpp"

namespace heckelab {

/// Sorted degree multiset d_1 <= ... <= d_n, n >= 1.
class BundleType {
 public:
  /// Sorts; throws DomainError on empty input.
  explicit BundleType(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return d_; }
  int rank() const { return static_cast<int>(d_.size()); }
  long degree() const;
  int min_degree() const { return d_.front(); }
  int max_degree() const { return d_.back(); }
  int operator[](std::size_t i) const { return d_[i]; }

  /// (b_i, l_i) with b_i strictly increasing.
  std::vector<std::pair<int, int>> grouped() const;
  bool distinct_degrees() const;

  /// E (x) O(k).
  BundleType twisted(int k) const;
  /// Direct sum.
  BundleType operator+(const BundleType& o) const;

  /// "O(-1)^2+O(3)"; O for degree zero.
  std::string to_string() const;

  friend auto operator<=>(const BundleType&, const BundleType&) = default;
  friend bool operator==(const BundleType&, const BundleType&) = default;

 private:
  std::vector<int> d_;
};

BundleType normalize(std::vector<int> degrees);

/// A bundle type up to twist, represented with minimum degree 0.
struct ProjBundleClass {
  BundleType bundle;
  friend auto operator<=>(const ProjBundleClass&, const ProjBundleClass&) = default;
  friend bool operator==(const ProjBundleClass&, const ProjBundleClass&) = default;
};

ProjBundleClass proj_class(const BundleType& e);

/// Q(E) = prod_i prod_{j<l_i} (q-1)/(q^{l_i-j}-1) = prod_i 1/[l_i]_q!.
QRat q_factor(const BundleType& e);

/// |GL_n(F_q)|.
Integer gl_order(unsigned n, const Integer& q0);
/// |Aut(E)| over F_{q0}.
Integer aut_order(const BundleType& e, const Integer& q0);
/// dim_{F_q} Hom(E, F) = sum max(0, f_j - e_i + 1).
long hom_dim(const BundleType& e, const BundleType& f);
/// dim_{F_q} Ext^1(E, F) = sum max(0, e_i - f_j - 1).
long ext1_dim(const BundleType& e, const BundleType& f);

/// Closed point of P^1 in the affine chart: base field size q, degree d, and
/// optionally an explicit monic irreducible polynomial in t.
class ClosedPoint {
 public:
  /// Degree-only point; the closed formulas need nothing more.
  ClosedPoint(unsigned q, int d);
  /// Explicit point; q must be prime and poly monic irreducible. The degree
  /// is taken from poly.  Throws DomainError otherwise.
  ClosedPoint(unsigned q, const std::vector<long>& poly);

  unsigned q() const { return q_; }
  int degree() const { return d_; }
  bool has_poly() const { return poly_.has_value(); }
  /// Throws DomainError when no polynomial was given.
  const FqPoly& poly() const;

 private:
  unsigned q_;
  int d_;
  std::optional<FqPoly> poly_;
};

/// The first monic irreducible polynomial of degree d over F_q in
/// lexicographic coefficient order.
FqPoly default_point_poly(unsigned q, int d);

}  // namespace heckelab
