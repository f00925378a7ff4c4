#pragma once

// Existence and multiplicity of Hecke modifications [E' -> E] of weight r at
// a closed point of degree d on P^1.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heckelab/bundles.hpp"
#include "heckelab/qcalc.hpp"

namespace heckelab {

/// Only the degree of the point enters the closed formulas.
struct ModificationQuery {
  BundleType e;
  BundleType e_prime;
  int d = 1;
  int r = 1;
};

/// eps_i = d_i - d'_i with both types sorted.  DomainError on rank mismatch.
std::vector<int> drops(const BundleType& e_prime, const BundleType& e);

enum class MultMethod { trivial, rank2, deg1anyr, spaced, grassmannian, spaced_factorization, hall };
std::string to_string(MultMethod m);

struct MultResult {
  QPoly value;
  MultMethod method = MultMethod::trivial;
  bool cross_checked = false;
};

struct MultOptions {
  /// Compare against the Hall engine when n*d <= guard_limit.
  bool cross_check = true;
  int guard_limit = 8;
};

bool exists_modification(const ModificationQuery& q);
MultResult multiplicity(const ModificationQuery& q, const MultOptions& opt = {});

struct Neighbor {
  QPoly multiplicity;
  MultMethod method = MultMethod::trivial;
};
/// Every E' with [E' -> E] of weight r, keyed by sorted type.
std::map<BundleType, Neighbor> neighbors(const BundleType& e, int d, int r, const MultOptions& opt = {});

/// exists_modification for the dual [E -> E'(x)] of weight n - r.
bool dual_existence_check(const ModificationQuery& q);

// Individual closed forms; each returns nullopt outside its hypotheses.

/// All weight-one modifications of a rank-2 bundle with multiplicities.
std::map<BundleType, QPoly> rank2_table(const BundleType& e, int d);
/// d = 1, any r: q^alpha prod Gr(theta_j, l_j).
std::optional<QPoly> deg1_any_weight(const BundleType& e_prime, const BundleType& e, int r);
/// All gaps >= d and distinct degrees: q^{|delta| d}.
std::optional<QPoly> spaced_degrees(const BundleType& e_prime, const BundleType& e, int d, int r);
/// E = O(b)^n, E' = O(b-d)^r + O(b)^{n-r}: Gr(r, n)(F_q).
std::optional<QPoly> grassmannian_case(const BundleType& e_prime, const BundleType& e, int d, int r);
/// Split at 1-based n1 in {2..n-1} with d_{n1+1} - d_{n1} >= d:
/// m1 * m2 * q^{r2 (n1 - r1) d}; the factors come from multiplicity().
std::optional<QPoly> spaced_factorization(const BundleType& e_prime, const BundleType& e, int d, int r, int n1,
                                          const MultOptions& opt = {});
/// d = 1 weight-r existence via degree-one theorems: E' = E - delta.
bool deg1_exists(const BundleType& e_prime, const BundleType& e, int r);
/// Weight-one chain criterion d_{j+1} - eps_{j+1} <= d_j for j in [s, B-1];
/// nullopt unless every eps_i is in [0, d] and sum eps = d.
std::optional<bool> chain_criterion(const BundleType& e_prime, const BundleType& e, int d);

}  // namespace heckelab
