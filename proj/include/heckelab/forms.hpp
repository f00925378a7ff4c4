#pragma once

// Unramified automorphic forms for PGL_n over P^1 on a degree-truncated set
// of projective bundle classes.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "heckelab/bundles.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/qcalc.hpp"

namespace heckelab {

/// All classes 0 = d_1 <= ... <= d_n <= D, indexed in lexicographic order
/// (index 0 is E_0 = O^n).
class TruncatedPBun {
 public:
  TruncatedPBun(int n, int spread);

  int rank() const { return n_; }
  int spread() const { return spread_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<BundleType>& classes() const { return classes_; }
  const BundleType& at(std::size_t i) const { return classes_[i]; }
  /// Index of the projective class of b, if inside the truncation.
  std::optional<std::size_t> index_of(const BundleType& b) const;

 private:
  int n_, spread_;
  std::vector<BundleType> classes_;
  std::map<BundleType, std::size_t> index_;
};

struct HeckeRow {
  std::size_t cls = 0;
  /// column class index -> multiplicity, summed over distinct neighbors E'
  std::map<std::size_t, QPoly> entries;
  /// every neighbor lies inside the truncation
  bool complete = true;
};

/// Phi_{x,r} at a degree-one point: (Phi f)(E) = sum_{E'} m(E', E) f(E').
/// Out-of-range neighbors are dropped and mark the row incomplete.
std::vector<HeckeRow> hecke_matrix(const TruncatedPBun& space, int r, const MultOptions& opt = {});

struct FormVector {
  TruncatedPBun space;
  std::vector<Rational> values;
  /// Value on the projective class of b; DomainError outside the truncation.
  Rational at(const BundleType& b) const;
  bool is_zero() const;
};

struct EigenQuery {
  int n = 2;
  long q = 2;
  std::vector<Rational> lambda;  // lambda_1 .. lambda_{n-1}
  int spread = 4;                // D
};

/// Homogeneous eigen-system {Phi_r f = lambda_r f} on the complete rows of
/// the (D+1)-padded truncation, as an exact matrix over Q.  Columns are the
/// padded classes.
std::vector<std::vector<Rational>> eigen_system(const EigenQuery& q);

/// Dimension of the solution space of a homogeneous system with the given
/// number of unknowns.
int nullity(std::vector<std::vector<Rational>> rows, std::size_t unknowns);
/// Basis of the solution space.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t unknowns);

struct EigenResult {
  FormVector form;
  int nullity = 0;
};

/// The eigenform with f(E_0) = e0.  Throws IdentityViolation when the
/// homogeneous system does not have nullity exactly 1 or when its solutions
/// vanish at E_0.
EigenResult eigenform_solve(const EigenQuery& q, const Rational& e0 = Rational(1));

/// p_* O(k) for the degree-n constant extension: O(k)^n.
BundleType trace_bundle(int n, int k);
/// Degrees k of coset representatives of Pic(P^1_n) / p^* Pic(P^1); the
/// quotient is trivial, so this is {0}.
std::vector<int> toroidal_representatives(int n);
/// sum over representatives of f(p_* L), the volume constant dropped.
Rational toroidal_sum(const FormVector& f);
/// Nullity of the eigen-system with the extra equation toroidal_sum(f) = 0.
int toroidal_constrained_nullity(const EigenQuery& q);

/// Number of extension classes in Ext^1(F, G) with middle term B, from
/// g^B = phi^B_{F,G} |Hom(F, G)| |Aut F| |Aut G| / |Aut B|.  Throws
/// IdentityViolation if the counts do not sum to q0^{dim Ext^1(F, G)}.
std::map<BundleType, Integer> extension_middle_distribution(const BundleType& f, const BundleType& g, long q0);

/// For each pair (F, G) of ranks (n1, n2) with degrees in [0, D] and minimum
/// 0 whose middles stay in the truncation: sum_B g^B f(B).
std::map<std::pair<BundleType, BundleType>, Rational> cusp_defect(const FormVector& f, int n1, int n2, long q0);

}  // namespace heckelab
