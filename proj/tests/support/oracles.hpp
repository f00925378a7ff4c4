#pragma once

// Test-side reference computations.  None of these call into the library's
// algorithms; they only borrow its value types for comparison.

#include <cstdint>
#include <map>
#include <vector>

#include "heckelab/bundles.hpp"
#include "heckelab/qcalc.hpp"

namespace oracle {

using heckelab::BundleType;
using heckelab::Integer;
using heckelab::QPoly;

/// prod_{i<k} (q^n - q^i) / (q^k - q^i): ordered bases over automorphisms.
Integer grassmannian_count(unsigned k, unsigned n, const Integer& q);

/// Subspaces of F^n as membership bitmaps, for F = F_p[t]/(P) with |F|^n small.
struct SmallField {
  int p;
  std::vector<int> modulus;  // monic, little-endian, irreducible
  int d;
  int size;
  SmallField(int p, std::vector<int> modulus);
  int add(int a, int b) const;
  int mul(int a, int b) const;
  /// F_p coordinates of element a (degree < d representative).
  std::vector<int> coords(int a) const;
  int from_coords(const std::vector<int>& c) const;
};

/// All k-dimensional subspaces of F^n, each as a sorted list of vector codes
/// (code = sum_i x_i |F|^i).
std::vector<std::vector<int>> all_subspaces(const SmallField& f, int n, int k);

/// Census of sub-sheaf types {s in E : s(x) in W} over all W of codimension r,
/// found by counting sections of each twist whose residue lies in W.
std::map<BundleType, Integer> section_census(const BundleType& e, const SmallField& f, int r);

/// The rank-two weight-one table exactly as printed: exponent 2i+2 in the
/// 0 < g < d branches.
std::map<BundleType, QPoly> rank2_printed(int d1, int d2, int d);

/// The same table with the i-terms of the 0 < g < d branches taken as
/// q^{g+2i+1} - q^{g+2i-1}.
std::map<BundleType, QPoly> rank2_corrected(int d1, int d2, int d);

/// Sorted sequences of length n in [lo, hi].
std::vector<BundleType> bundle_grid(int n, int lo, int hi);

}  // namespace oracle
