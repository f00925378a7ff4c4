#include "heckelab/fq_poly.hpp"

#include <sstream>

#include "heckelab/errors.hpp"

namespace heckelab {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FqPoly::FqPoly(std::uint32_t p, const std::vector<long>& coeffs) : p_(p) {
  const long sp = static_cast<long>(p);
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.push_back(static_cast<std::uint32_t>(((c % sp) + sp) % sp));
  trim();
}

FqPoly FqPoly::monomial(std::uint32_t p, std::uint32_t c, unsigned k) {
  FqPoly r(p);
  r.c_.assign(k + 1, 0);
  r.c_[k] = c % p;
  r.trim();
  return r;
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly& FqPoly::operator+=(const FqPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p_;
  trim();
  return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
  trim();
  return *this;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  FqPoly r(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += std::uint64_t{a.c_[i]} * b.c_[j];
  }
  r.c_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i] % a.p_);
  r.trim();
  return r;
}

FqPoly FqPoly::scaled(std::uint32_t s) const {
  FqPoly r(p_);
  s %= p_;
  if (s == 0) return r;
  r.c_ = c_;
  for (auto& c : r.c_) c = static_cast<std::uint32_t>(std::uint64_t{c} * s % p_);
  return r;
}

std::uint32_t FqPoly::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) throw ArithmeticError("inverse of zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t r = 1, b = a;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
  }
  return static_cast<std::uint32_t>(r);
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw ArithmeticError("F_p[t] division by zero");
  FqPoly q(a.p_);
  FqPoly r = a;
  if (r.degree() < b.degree()) return {q, r};
  const std::uint32_t lb_inv = b.inv(b.leading());
  q.c_.assign(static_cast<std::size_t>(r.degree() - b.degree() + 1), 0);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{r.leading()} * lb_inv % a.p_);
    q.c_[shift] = c;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[shift + j] = static_cast<std::uint32_t>((r.c_[shift + j] + a.p_ - std::uint64_t{c} * b.c_[j] % a.p_) % a.p_);
    r.trim();
  }
  q.trim();
  return {q, r};
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv(leading()));
}

FqPoly FqPoly::gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<long> FqPoly::to_vector() const { return {c_.begin(), c_.end()}; }

std::string FqPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0 || c_[k] != 1) os << c_[k];
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

bool is_irreducible(const FqPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  const std::uint32_t p = f.modulus();
  for (int k = 1; 2 * k <= n; ++k) {
    // monic divisors of degree k: t^k + (lower part of degree < k)
    bool found = false;
    for_each_poly_upto(p, k - 1, [&](const FqPoly& low) {
      if (found) return;
      FqPoly g = FqPoly::monomial(p, 1, static_cast<unsigned>(k)) + low;
      if (FqPoly::divmod(f, g).second.is_zero()) found = true;
    });
    if (found) return false;
  }
  return true;
}

}  // namespace heckelab
