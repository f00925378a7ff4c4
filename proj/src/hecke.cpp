#include "heckelab/hecke.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "heckelab/errors.hpp"
#include "heckelab/hall.hpp"

namespace heckelab {

namespace {

QPoly qpow(long k) { return QPoly::monomial(1, static_cast<std::size_t>(k)); }

void check_args(const BundleType& e_prime, const BundleType& e, int d, int r) {
  if (e_prime.rank() != e.rank())
    throw DomainError("rank mismatch: " + e_prime.to_string() + " vs " + e.to_string());
  if (d < 1) throw DomainError("point degree must be >= 1");
  if (r < 0) throw DomainError("weight must be >= 0");
}

bool eps_in_range(const std::vector<int>& eps, int d) {
  return std::all_of(eps.begin(), eps.end(), [d](int x) { return x >= 0 && x <= d; });
}

// Split both types after the first k entries.
std::pair<BundleType, BundleType> split(const BundleType& b, int k) {
  const auto& v = b.degrees();
  return {BundleType({v.begin(), v.begin() + k}), BundleType({v.begin() + k, v.end()})};
}

// Result of the cheap tests shared by existence and multiplicity; nullopt
// when the instance needs a real theorem.
std::optional<bool> trivial_existence(const BundleType& e_prime, const BundleType& e, int d, int r) {
  const int n = e.rank();
  if (e.degree() - e_prime.degree() != static_cast<long>(r) * d) return false;
  if (r > n) return false;
  if (!eps_in_range(drops(e_prime, e), d)) return false;
  if (r == 0) return e == e_prime;
  if (r == n) return e_prime == e.twisted(-d);
  return std::nullopt;
}

}  // namespace

std::vector<int> drops(const BundleType& e_prime, const BundleType& e) {
  if (e_prime.rank() != e.rank())
    throw DomainError("rank mismatch: " + e_prime.to_string() + " vs " + e.to_string());
  std::vector<int> eps(e.degrees().size());
  for (std::size_t i = 0; i < eps.size(); ++i) eps[i] = e[i] - e_prime[i];
  return eps;
}

std::string to_string(MultMethod m) {
  switch (m) {
    case MultMethod::trivial: return "trivial";
    case MultMethod::rank2: return "rank2";
    case MultMethod::deg1anyr: return "deg1anyr";
    case MultMethod::spaced: return "spaced";
    case MultMethod::grassmannian: return "grassmannian";
    case MultMethod::spaced_factorization: return "spaced_factorization";
    case MultMethod::hall: return "hall";
  }
  return "unknown";
}

// ---------------------------------------------------------------- closed forms

std::map<BundleType, QPoly> rank2_table(const BundleType& e, int d) {
  if (e.rank() != 2) throw DomainError("rank2_table needs a rank-2 bundle");
  if (d < 1) throw DomainError("point degree must be >= 1");
  const int d1 = e[0], d2 = e[1], g = d2 - d1;
  std::map<BundleType, QPoly> t;
  auto add = [&](int a, int b, const QPoly& c) { t[BundleType({a, b})] += c; };
  if (g >= d) {
    add(d1, d2 - d, qpow(d));
    add(d1 - d, d2, QPoly(1));
    return t;
  }
  // 0 <= g < d.  For g = 0 the first two classes coincide (q + 1).
  if ((d + g) % 2 == 0) add((d1 + d2 - d) / 2, (d1 + d2 - d) / 2, qpow(d) - qpow(d - 1));
  add(d1, d2 - d, qpow(g + 1));
  add(d1 - d, d2, QPoly(1));
  for (int i = 1; 2 * i <= d - g - 1; ++i) add(d1 - i, d2 - d + i, qpow(g + 2 * i + 1) - qpow(g + 2 * i - 1));
  return t;
}

namespace {

// theta_j = number of dropped entries in group j, solved from the top group
// down; nullopt when E' is not of the form E - delta.
std::optional<std::vector<int>> solve_theta(const BundleType& e_prime, const BundleType& e) {
  const auto groups = e.grouped();
  std::map<int, int> cnt;
  for (int x : e_prime.degrees()) ++cnt[x];
  std::vector<int> theta(groups.size());
  for (std::size_t j = groups.size(); j-- > 0;) {
    const auto [b, l] = groups[j];
    const int above = (j + 1 < groups.size() && groups[j + 1].first == b + 1) ? theta[j + 1] : 0;
    const int th = l + above - cnt[b];
    if (th < 0 || th > l) return std::nullopt;
    theta[j] = th;
  }
  std::vector<int> rebuilt;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    for (int i = 0; i < groups[j].second; ++i) rebuilt.push_back(groups[j].first - (i < theta[j] ? 1 : 0));
  }
  if (BundleType(rebuilt) != e_prime) return std::nullopt;
  return theta;
}

}  // namespace

bool deg1_exists(const BundleType& e_prime, const BundleType& e, int r) {
  check_args(e_prime, e, 1, r);
  auto theta = solve_theta(e_prime, e);
  return theta && std::accumulate(theta->begin(), theta->end(), 0) == r;
}

std::optional<QPoly> deg1_any_weight(const BundleType& e_prime, const BundleType& e, int r) {
  check_args(e_prime, e, 1, r);
  auto theta = solve_theta(e_prime, e);
  if (!theta || std::accumulate(theta->begin(), theta->end(), 0) != r) return QPoly();
  const auto groups = e.grouped();
  long alpha = 0;
  int partial = 0;
  QPoly prod(1);
  for (std::size_t j = 0; j < groups.size(); ++j) {
    const int l = groups[j].second, th = (*theta)[j];
    partial += th;
    alpha += static_cast<long>(l - th) * (r - partial);
    prod *= gaussian_binomial(static_cast<unsigned>(th), static_cast<unsigned>(l));
  }
  return qpow(alpha) * prod;
}

std::optional<QPoly> spaced_degrees(const BundleType& e_prime, const BundleType& e, int d, int r) {
  check_args(e_prime, e, d, r);
  for (int i = 1; i < e.rank(); ++i)
    if (e[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(i) - 1] < d) return std::nullopt;
  const auto eps = drops(e_prime, e);
  std::vector<int> bits;
  for (int x : eps) {
    if (x != 0 && x != d) return QPoly();
    bits.push_back(x == d ? 1 : 0);
  }
  DeltaVec delta(bits);
  if (delta.r() != r) return QPoly();
  return qpow(weight(delta) * d);
}

std::optional<QPoly> grassmannian_case(const BundleType& e_prime, const BundleType& e, int d, int r) {
  check_args(e_prime, e, d, r);
  const int n = e.rank();
  if (e.min_degree() != e.max_degree() || r > n) return std::nullopt;
  const int b = e[0];
  std::vector<int> target(static_cast<std::size_t>(n), b);
  for (int i = 0; i < r; ++i) target[static_cast<std::size_t>(i)] = b - d;
  if (BundleType(target) != e_prime) return std::nullopt;
  return gaussian_binomial(static_cast<unsigned>(r), static_cast<unsigned>(n));
}

std::optional<QPoly> spaced_factorization(const BundleType& e_prime, const BundleType& e, int d, int r, int n1,
                                          const MultOptions& opt) {
  check_args(e_prime, e, d, r);
  const int n = e.rank();
  if (n1 < 2 || n1 > n - 1) return std::nullopt;
  if (e[static_cast<std::size_t>(n1)] - e[static_cast<std::size_t>(n1) - 1] < d) return std::nullopt;
  auto [e1, e2] = split(e, n1);
  auto [f1, f2] = split(e_prime, n1);
  const long diff = e1.degree() - f1.degree();
  if (diff % d != 0) return QPoly();
  const long r1 = diff / d, r2 = r - r1;
  if (r1 < 0 || r1 > n1 || r2 < 0 || r2 > n - n1) return QPoly();
  const QPoly m1 = multiplicity({e1, f1, d, static_cast<int>(r1)}, opt).value;
  if (m1.is_zero()) return QPoly();
  const QPoly m2 = multiplicity({e2, f2, d, static_cast<int>(r2)}, opt).value;
  return m1 * m2 * qpow(r2 * (n1 - r1) * d);
}

std::optional<bool> chain_criterion(const BundleType& e_prime, const BundleType& e, int d) {
  check_args(e_prime, e, d, 1);
  const auto eps = drops(e_prime, e);
  if (!eps_in_range(eps, d) || std::accumulate(eps.begin(), eps.end(), 0) != d) return std::nullopt;
  int s = -1, big_b = -1;
  for (int i = 0; i < static_cast<int>(eps.size()); ++i) {
    if (eps[static_cast<std::size_t>(i)] != 0) {
      if (s < 0) s = i;
      big_b = i;
    }
  }
  for (int j = s; j < big_b; ++j) {
    const auto u = static_cast<std::size_t>(j);
    if (e[u + 1] - eps[u + 1] > e[u]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- dispatch

bool exists_modification(const ModificationQuery& q) {
  const auto& [e, ep, d, r] = q;
  check_args(ep, e, d, r);
  if (auto t = trivial_existence(ep, e, d, r)) return *t;
  // A gap wider than d splits every modification into two independent ones.
  for (int j = 1; j < e.rank(); ++j) {
    const auto u = static_cast<std::size_t>(j);
    if (e[u] - e[u - 1] > d) {
      auto [e1, e2] = split(e, j);
      auto [f1, f2] = split(ep, j);
      const long diff = e1.degree() - f1.degree();
      if (diff % d != 0) return false;
      const int r1 = static_cast<int>(diff / d);
      if (r1 < 0 || r1 > r) return false;
      return exists_modification({e1, f1, d, r1}) && exists_modification({e2, f2, d, r - r1});
    }
  }
  if (d == 1) return true;  // eps is already a delta vector
  if (r == 1) return *chain_criterion(ep, e, d);
  return !hall_multiplicity(ep, e, d, r).is_zero();
}

MultResult multiplicity(const ModificationQuery& q, const MultOptions& opt) {
  const auto& [e, ep, d, r] = q;
  check_args(ep, e, d, r);
  const int n = e.rank();
  MultResult res;
  if (auto t = trivial_existence(ep, e, d, r)) {
    res.value = *t ? QPoly(1) : QPoly();
    res.method = MultMethod::trivial;
  } else if (n == 2) {
    const auto table = rank2_table(e, d);
    auto it = table.find(ep);
    res.value = it == table.end() ? QPoly() : it->second;
    res.method = MultMethod::rank2;
  } else if (d == 1) {
    res.value = *deg1_any_weight(ep, e, r);
    res.method = MultMethod::deg1anyr;
  } else if (auto s = spaced_degrees(ep, e, d, r)) {
    res.value = *s;
    res.method = MultMethod::spaced;
  } else if (auto g = grassmannian_case(ep, e, d, r)) {
    res.value = *g;
    res.method = MultMethod::grassmannian;
  } else {
    std::optional<QPoly> f;
    for (int n1 = 2; n1 <= n - 1 && !f; ++n1) f = spaced_factorization(ep, e, d, r, n1, opt);
    if (f) {
      res.value = *f;
      res.method = MultMethod::spaced_factorization;
    } else {
      res.value = hall_multiplicity(ep, e, d, r);
      res.method = MultMethod::hall;
    }
  }
  if (opt.cross_check && res.method != MultMethod::hall && n * d <= opt.guard_limit) {
    const QPoly h = hall_multiplicity(ep, e, d, r);
    if (h != res.value)
      throw IdentityViolation("multiplicity [" + ep.to_string() + " -> " + e.to_string() + "] d=" + std::to_string(d) +
                              " r=" + std::to_string(r) + ": " + to_string(res.method) + " gives " +
                              res.value.to_string() + ", Hall engine gives " + h.to_string());
    res.cross_checked = true;
  }
  return res;
}

std::map<BundleType, Neighbor> neighbors(const BundleType& e, int d, int r, const MultOptions& opt) {
  const int n = e.rank();
  if (r < 1 || r > n) throw DomainError("neighbors needs 1 <= r <= rank");
  if (d < 1) throw DomainError("point degree must be >= 1");
  std::set<BundleType> candidates;
  std::vector<int> eps(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      if (left != 0) return;
      std::vector<int> v = e.degrees();
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= eps[k];
      candidates.insert(BundleType(std::move(v)));
      return;
    }
    for (int x = 0; x <= std::min(d, left); ++x) {
      eps[static_cast<std::size_t>(i)] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, r * d);
  std::map<BundleType, Neighbor> out;
  for (const auto& ep : candidates) {
    const ModificationQuery q{e, ep, d, r};
    const bool ex = exists_modification(q);
    const MultResult m = multiplicity(q, opt);
    if (ex == m.value.is_zero())
      throw IdentityViolation("existence and multiplicity disagree for [" + ep.to_string() + " -> " + e.to_string() +
                              "]: exists=" + (ex ? "true" : "false") + ", m=" + m.value.to_string());
    if (ex) out.emplace(ep, Neighbor{m.value, m.method});
  }
  return out;
}

bool dual_existence_check(const ModificationQuery& q) {
  return exists_modification({q.e_prime.twisted(q.d), q.e, q.d, q.e.rank() - q.r});
}

}  // namespace heckelab
