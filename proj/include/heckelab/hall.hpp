#pragma once

// Hall algebra of Coh(P^1), restricted to classes B + K_x^s for one closed
// point x of degree d.

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "heckelab/bundles.hpp"
#include "heckelab/deltas.hpp"
#include "heckelab/qcalc.hpp"

namespace heckelab {

struct HallTerm {
  BundleType bundle;
  int torsion = 0;  // s in B + K_x^s
  friend auto operator<=>(const HallTerm&, const HallTerm&) = default;
  friend bool operator==(const HallTerm&, const HallTerm&) = default;
};

class HallElement {
 public:
  using Map = std::map<HallTerm, QRat>;

  HallElement() = default;
  static HallElement single(HallTerm t, QRat c = QRat(1));

  /// Adds c to the coefficient of t, dropping the entry if it cancels.
  void add(const HallTerm& t, const QRat& c);
  /// Zero when absent.
  QRat coeff(const HallTerm& t) const;
  QRat coeff(const BundleType& b) const { return coeff(HallTerm{b, 0}); }

  const Map& terms() const& { return terms_; }
  // by value on temporaries, so range-for over f().terms() stays valid
  Map terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  HallElement& operator+=(const HallElement& o);
  HallElement scaled(const QRat& c) const;
  friend bool operator==(const HallElement&, const HallElement&) = default;

  std::string to_string() const;

 private:
  Map terms_;
};

HallElement vec_part(const HallElement& h);

enum class KxMethod { closed, recursive };

/// Structure-constant engine.  The straightening memo is guarded by a mutex,
/// so one engine may be shared between threads; results never depend on the
/// interleaving.
class HallEngine {
 public:
  /// Ascending words with their Z[q] coefficients.
  using WordSum = std::map<std::vector<int>, QPoly>;

  /// Rewrites O(e_1)*...*O(e_k) into a combination of non-decreasing words.
  WordSum straighten(const std::vector<int>& word);

  /// O(e_1)*...*O(e_k) as a combination of bundle classes.
  HallElement word_product(const std::vector<int>& degrees);
  /// F*G = Q(F) Q(G) word(F ++ G).
  HallElement bundle_product(const BundleType& f, const BundleType& g);
  /// K_x^r * E, by the closed sum over Delta_i^n or by repeated use of
  /// relation (v).
  HallElement kx_times(int r, const BundleType& e, int d, KxMethod method = KxMethod::closed);
  /// General product; at most one factor in each pair of terms may carry
  /// torsion on the left (K_x^a * K_x^b is not in the span). DomainError
  /// otherwise.
  HallElement multiply(const HallElement& a, const HallElement& b, int d);

  /// Coefficient of (E, 0) in K_x^r * E'.  Zero unless deg E - deg E' = r d.
  /// Throws DomainError on rank mismatch and IdentityViolation if the result
  /// is not a polynomial.
  QPoly hall_multiplicity(const BundleType& e_prime, const BundleType& e, int d, int r);

  std::size_t memo_size() const;
  void clear_memo();

 private:
  HallElement classes_of(const WordSum& ws);
  mutable std::mutex mu_;
  std::map<std::vector<int>, WordSum> memo_;
};

/// Process-wide shared engine.
HallEngine& default_engine();

HallElement word_product(const std::vector<int>& degrees);
HallElement bundle_product(const BundleType& f, const BundleType& g);
HallElement kx_times(int r, const BundleType& e, int d, KxMethod method = KxMethod::closed);
QPoly hall_multiplicity(const BundleType& e_prime, const BundleType& e, int d, int r);

struct RealizingDelta {
  DeltaVec delta;
  long weight = 0;
  /// Coefficient of E in word(d' + d*delta).
  QPoly coeff;
  bool maximal = false;
  /// Nonzero coefficient that fails to be positive at some q in {2,3,4,5}.
  bool positivity_flag = false;
};

/// All delta in Delta_r^n whose shifted word contains E.
std::vector<RealizingDelta> realizing_deltas(const BundleType& e_prime, const BundleType& e, int d, int r);

}  // namespace heckelab
