#include "heckelab/deltas.hpp"

#include <algorithm>
#include <string>

#include "heckelab/errors.hpp"

namespace heckelab {

DeltaVec::DeltaVec(std::vector<int> bits) : b_(std::move(bits)) {
  for (int x : b_) {
    if (x != 0 && x != 1) throw DomainError("delta vector entries must be 0 or 1");
    r_ += x;
  }
}

DeltaVec DeltaVec::concat(const DeltaVec& o) const {
  std::vector<int> v = b_;
  v.insert(v.end(), o.b_.begin(), o.b_.end());
  return DeltaVec(std::move(v));
}

std::vector<DeltaVec> enumerate_deltas(int n, int r) {
  if (n < 0 || r < 0 || r > n)
    throw DomainError("enumerate_deltas: need 0 <= r <= n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
  // prev_permutation from the largest arrangement walks bit strings in
  // descending lexicographic order.
  std::vector<int> bits(static_cast<std::size_t>(n), 0);
  std::fill(bits.begin(), bits.begin() + r, 1);
  std::vector<DeltaVec> out;
  do {
    out.emplace_back(bits);
  } while (std::prev_permutation(bits.begin(), bits.end()));
  return out;
}

long weight_with_total(const DeltaVec& d, int total) {
  long w = 0, seen = 0;
  for (int x : d.bits()) {
    seen += x;
    if (x == 0) w += total - seen;
  }
  return w;
}

long weight(const DeltaVec& d) { return weight_with_total(d, d.r()); }

long omega(const DeltaVec& d) {
  long s = 0;
  for (int i = 0; i < d.n(); ++i)
    if (d[static_cast<std::size_t>(i)]) s += i + 1;
  return s;
}

QPoly schubert_count(int n, int r) {
  std::vector<int> top(static_cast<std::size_t>(n), 0);
  for (int i = n - r; i < n; ++i) top[static_cast<std::size_t>(i)] = 1;
  const long om = omega(DeltaVec(top));
  QPoly s;
  for (const auto& sigma : enumerate_deltas(n, r)) s += QPoly::monomial(1, static_cast<std::size_t>(om - omega(sigma)));
  return s;
}

}  // namespace heckelab
