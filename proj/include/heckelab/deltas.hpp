#pragma once

// 0/1 vectors of length n with r ones and their statistics.  Positions are
// 1-based in the formulas below; bits() is an ordinary 0-based array.

#include <compare>
#include <vector>

#include "heckelab/qcalc.hpp"

namespace heckelab {

class DeltaVec {
 public:
  /// Each entry must be 0 or 1 (DomainError otherwise).
  explicit DeltaVec(std::vector<int> bits);

  const std::vector<int>& bits() const { return b_; }
  int n() const { return static_cast<int>(b_.size()); }
  int r() const { return r_; }
  int operator[](std::size_t i) const { return b_[i]; }

  /// Concatenation d1 (+) d2.
  DeltaVec concat(const DeltaVec& o) const;

  friend auto operator<=>(const DeltaVec& a, const DeltaVec& b) { return a.b_ <=> b.b_; }
  friend bool operator==(const DeltaVec& a, const DeltaVec& b) { return a.b_ == b.b_; }

 private:
  std::vector<int> b_;
  int r_ = 0;
};

/// All of Delta_r^n in descending lexicographic order of bit strings, so
/// that (1,0) precedes (0,1).  Throws DomainError if r > n or r < 0.
std::vector<DeltaVec> enumerate_deltas(int n, int r);

/// |delta| = sum_i (1 - delta_i)(r - sum_{j<=i} delta_j).
long weight(const DeltaVec& d);
/// Same sum with an explicit total r in place of the vector's own count; used
/// for the sub-selections sigma in Delta_i^n of the K_x^r * E expansion.
long weight_with_total(const DeltaVec& d, int total);
/// Sum of 1-based positions of the ones.
long omega(const DeltaVec& d);

/// sum_{sigma in Delta_r^n} q^{omega(delta_max) - omega(sigma)},
/// delta_max = (0^{n-r}, 1^r).
QPoly schubert_count(int n, int r);

}  // namespace heckelab
