#pragma once

// Brute force over finite fields: subspaces of the fiber at x, splitting
// types of the resulting subsheaves, Smith normal forms over F_q[t], and
// automorphism / monomorphism counts.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "heckelab/bundles.hpp"
#include "heckelab/fq_poly.hpp"
#include "heckelab/qcalc.hpp"

namespace heckelab {

struct OracleBudget {
  std::uint64_t subspaces = 1'000'000;
  std::uint64_t matrices = 10'000'000;
};

/// F_{q^d} = F_q[t]/(P).  Element i encodes the residue sum_k c_k t^k with
/// i = sum_k c_k q^k.  Arithmetic is table driven; q^d is capped at 1024.
class FiniteField {
 public:
  FiniteField(std::uint32_t p, const FqPoly& modulus);
  explicit FiniteField(const ClosedPoint& x) : FiniteField(x.q(), x.poly()) {}

  std::uint32_t p() const { return p_; }
  int degree() const { return d_; }
  std::uint32_t size() const { return size_; }
  const FqPoly& modulus() const { return mod_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * size_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * size_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  /// ArithmeticError on zero.
  std::uint32_t inv(std::uint32_t a) const;

  /// Residue of f mod P.
  std::uint32_t reduce(const FqPoly& f) const;
  /// Representative of degree < d.
  FqPoly lift(std::uint32_t a) const;
  /// F_q coordinates c_0..c_{d-1}.
  std::vector<std::uint32_t> coords(std::uint32_t a) const;

 private:
  std::uint32_t encode(const std::vector<std::uint32_t>& c) const;
  std::uint32_t p_;
  int d_;
  std::uint32_t size_;
  FqPoly mod_;
  std::vector<std::uint32_t> add_, mul_, neg_;
};

/// Reduced row-echelon basis of a subspace of F^n; rows[i][pivots[i]] = 1.
struct FiberSubspace {
  int n = 0;
  std::vector<int> pivots;
  std::vector<std::vector<std::uint32_t>> rows;
  int dim() const { return static_cast<int>(rows.size()); }
};

/// Pivot sets of the Schubert cells of Gr(k, n), in lexicographic order.
std::vector<std::vector<int>> schubert_cells(int n, int k);
/// Every subspace of one cell, in a fixed order.
void for_each_subspace_in_cell(const FiniteField& f, int n, const std::vector<int>& pivots,
                               const std::function<void(const FiberSubspace&)>& fn);
/// All (n - r)-dimensional subspaces of F^n, cell by cell.  ResourceError if
/// their number exceeds the budget.
std::vector<FiberSubspace> enumerate_subspaces(int n, int r, const FiniteField& f, const OracleBudget& budget = {});

/// Splitting type of E' = {s in E : s(x) in W}, read off from section
/// counts h0(E'(k)).
BundleType splitting_type(const BundleType& e, const FiberSubspace& w, const ClosedPoint& x);
BundleType splitting_type(const BundleType& e, const FiberSubspace& w, const FiniteField& f);

/// Census of splitting types over all codimension-r subspaces of the fiber.
/// Cells are distributed over `threads` workers and merged by type, so the
/// result does not depend on the schedule.
std::map<BundleType, Integer> brute_multiplicity(const BundleType& e, const ClosedPoint& x, int r,
                                                 const OracleBudget& budget = {}, unsigned threads = 1);

// ---------------------------------------------------------------- F_q[t] matrices

using PolyMatrix = std::vector<std::vector<FqPoly>>;

PolyMatrix identity_matrix(std::uint32_t p, int n);
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
/// Cofactor expansion; fine for the small sizes used here.
FqPoly determinant(const PolyMatrix& m);
/// Parses rows of little-endian coefficient lists.
PolyMatrix make_matrix(std::uint32_t p, const std::vector<std::vector<std::vector<long>>>& entries);

struct SmithForm {
  std::vector<FqPoly> diag;  // monic, diag[i] | diag[i+1]
  PolyMatrix left, right;    // M = left * diag * right, both unimodular
};

/// DomainError if M is singular or not square; IdentityViolation if the
/// factorization fails to reproduce M.
SmithForm smith_normal_form(const PolyMatrix& m);

/// Basis (as columns) of {v in F_q[t]^n : v mod P in W}.
PolyMatrix modification_lattice(const FiberSubspace& w, const FiniteField& f);

/// Count of invertible endomorphism matrices of E over F_q: entry (i, j) of
/// degree <= d_i - d_j, determinant a nonzero constant.
Integer brute_aut_order(const BundleType& e, std::uint32_t q, const OracleBudget& budget = {});
/// Count of maps E' -> E (entry (i, j) of degree <= d_i - d'_j) with
/// determinant u * P, u a unit.
Integer count_monomorphisms(const BundleType& e_prime, const BundleType& e, const ClosedPoint& x,
                            const OracleBudget& budget = {});

}  // namespace heckelab
