#include "heckelab/bundles.hpp"

#include <algorithm>
#include <numeric>

#include "heckelab/errors.hpp"

namespace heckelab {

BundleType::BundleType(std::vector<int> degrees) : d_(std::move(degrees)) {
  if (d_.empty()) throw DomainError("bundle type needs at least one degree");
  std::sort(d_.begin(), d_.end());
}

long BundleType::degree() const { return std::accumulate(d_.begin(), d_.end(), 0L); }

std::vector<std::pair<int, int>> BundleType::grouped() const {
  std::vector<std::pair<int, int>> g;
  for (int x : d_) {
    if (!g.empty() && g.back().first == x)
      ++g.back().second;
    else
      g.emplace_back(x, 1);
  }
  return g;
}

bool BundleType::distinct_degrees() const {
  return std::adjacent_find(d_.begin(), d_.end()) == d_.end();
}

BundleType BundleType::twisted(int k) const {
  std::vector<int> v = d_;
  for (int& x : v) x += k;
  return BundleType(std::move(v));
}

BundleType BundleType::operator+(const BundleType& o) const {
  std::vector<int> v = d_;
  v.insert(v.end(), o.d_.begin(), o.d_.end());
  return BundleType(std::move(v));
}

std::string BundleType::to_string() const {
  std::string s;
  for (auto [b, l] : grouped()) {
    if (!s.empty()) s += "+";
    s += b == 0 ? "O" : "O(" + std::to_string(b) + ")";
    if (l > 1) s += "^" + std::to_string(l);
  }
  return s;
}

BundleType normalize(std::vector<int> degrees) { return BundleType(std::move(degrees)); }

ProjBundleClass proj_class(const BundleType& e) { return {e.twisted(-e.min_degree())}; }

QRat q_factor(const BundleType& e) {
  QPoly den(1);
  for (auto [b, l] : e.grouped()) den *= q_factorial(static_cast<unsigned>(l));
  return QRat(QPoly(1), den);
}

Integer gl_order(unsigned n, const Integer& q0) {
  Integer r = 1;
  const Integer qn = ipow(q0, n);
  for (unsigned i = 0; i < n; ++i) r *= qn - ipow(q0, i);
  return r;
}

Integer aut_order(const BundleType& e, const Integer& q0) {
  const auto g = e.grouped();
  Integer r = 1;
  unsigned long ex = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    r *= gl_order(static_cast<unsigned>(g[i].second), q0);
    for (std::size_t j = i + 1; j < g.size(); ++j)
      ex += static_cast<unsigned long>(g[i].second) * g[j].second * (g[j].first - g[i].first + 1);
  }
  return r * ipow(q0, ex);
}

long hom_dim(const BundleType& e, const BundleType& f) {
  long s = 0;
  for (int a : e.degrees())
    for (int b : f.degrees()) s += std::max(0, b - a + 1);
  return s;
}

long ext1_dim(const BundleType& e, const BundleType& f) {
  long s = 0;
  for (int a : e.degrees())
    for (int b : f.degrees()) s += std::max(0, a - b - 1);
  return s;
}

ClosedPoint::ClosedPoint(unsigned q, int d) : q_(q), d_(d) {
  if (q < 2) throw DomainError("base field size must be >= 2");
  if (d < 1) throw DomainError("point degree must be >= 1");
}

ClosedPoint::ClosedPoint(unsigned q, const std::vector<long>& poly) : q_(q), d_(0) {
  if (!is_prime(q)) throw DomainError("explicit points need a prime base field, got q = " + std::to_string(q));
  FqPoly f(q, poly);
  if (f.degree() < 1) throw DomainError("point polynomial must have degree >= 1");
  if (static_cast<std::size_t>(f.degree()) + 1 != poly.size() || !f.is_monic())
    throw DomainError("point polynomial must be monic: " + f.to_string());
  if (!is_irreducible(f)) throw DomainError("point polynomial is reducible: " + f.to_string());
  d_ = f.degree();
  poly_ = std::move(f);
}

const FqPoly& ClosedPoint::poly() const {
  if (!poly_) throw DomainError("closed point has no explicit polynomial");
  return *poly_;
}

FqPoly default_point_poly(unsigned q, int d) {
  if (!is_prime(q)) throw DomainError("default point polynomial needs prime q");
  if (d < 1) throw DomainError("point degree must be >= 1");
  std::optional<FqPoly> found;
  for_each_poly_upto(q, d - 1, [&](const FqPoly& low) {
    if (found) return;
    FqPoly f = FqPoly::monomial(q, 1, static_cast<unsigned>(d)) + low;
    if (is_irreducible(f)) found = f;
  });
  return *found;  // irreducibles exist in every degree
}

}  // namespace heckelab
