#include "oracles.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace oracle {

Integer grassmannian_count(unsigned k, unsigned n, const Integer& q) {
  if (k > n) return 0;
  Integer num = 1, den = 1, qn, qk, qi = 1;
  mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), n);
  mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), k);
  for (unsigned i = 0; i < k; ++i) {
    num *= qn - qi;
    den *= qk - qi;
    qi *= q;
  }
  if (num % den != 0) throw std::logic_error("non-integral Grassmannian count");
  return num / den;
}

SmallField::SmallField(int p_, std::vector<int> modulus_) : p(p_), modulus(std::move(modulus_)) {
  d = static_cast<int>(modulus.size()) - 1;
  if (d < 1 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
  size = 1;
  for (int i = 0; i < d; ++i) size *= p;
}

std::vector<int> SmallField::coords(int a) const {
  std::vector<int> c(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i, a /= p) c[static_cast<std::size_t>(i)] = a % p;
  return c;
}

int SmallField::from_coords(const std::vector<int>& c) const {
  int a = 0;
  for (int i = d - 1; i >= 0; --i) a = a * p + ((c[static_cast<std::size_t>(i)] % p) + p) % p;
  return a;
}

int SmallField::add(int a, int b) const {
  auto x = coords(a), y = coords(b);
  for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] += y[static_cast<std::size_t>(i)];
  return from_coords(x);
}

int SmallField::mul(int a, int b) const {
  const auto x = coords(a), y = coords(b);
  std::vector<int> prod(static_cast<std::size_t>(2 * d), 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      prod[static_cast<std::size_t>(i + j)] =
          (prod[static_cast<std::size_t>(i + j)] + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p;
  // reduce t^k for k >= d using t^d = -(m_0 + ... + m_{d-1} t^{d-1})
  for (int k = 2 * d - 1; k >= d; --k) {
    const int c = prod[static_cast<std::size_t>(k)];
    if (!c) continue;
    prod[static_cast<std::size_t>(k)] = 0;
    for (int i = 0; i < d; ++i) {
      auto& slot = prod[static_cast<std::size_t>(k - d + i)];
      slot = ((slot - c * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
    }
  }
  prod.resize(static_cast<std::size_t>(d));
  return from_coords(prod);
}

namespace {

struct VecOps {
  const SmallField& f;
  int n;
  std::vector<int> split(int code) const {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i, code /= f.size) v[static_cast<std::size_t>(i)] = code % f.size;
    return v;
  }
  int join(const std::vector<int>& v) const {
    int code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * f.size + v[static_cast<std::size_t>(i)];
    return code;
  }
  int axpy(int u, int c, int v) const {
    auto a = split(u), b = split(v);
    for (int i = 0; i < n; ++i)
      a[static_cast<std::size_t>(i)] = f.add(a[static_cast<std::size_t>(i)], f.mul(c, b[static_cast<std::size_t>(i)]));
    return join(a);
  }
};

int log_p(Integer count, int p) {
  int e = 0;
  while (count > 1) {
    if (count % p != 0) throw std::logic_error("count is not a power of p");
    count /= p;
    ++e;
  }
  return e;
}

}  // namespace

std::vector<std::vector<int>> all_subspaces(const SmallField& f, int n, int k) {
  const VecOps ops{f, n};
  int total = 1;
  for (int i = 0; i < n; ++i) total *= f.size;
  std::set<std::vector<int>> level{{0}};
  for (int j = 0; j < k; ++j) {
    std::set<std::vector<int>> next;
    for (const auto& u : level) {
      const std::set<int> in(u.begin(), u.end());
      for (int v = 1; v < total; ++v) {
        if (in.count(v)) continue;
        std::set<int> span;
        for (int x : u)
          for (int c = 0; c < f.size; ++c) span.insert(ops.axpy(x, c, v));
        next.emplace(span.begin(), span.end());
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::map<BundleType, Integer> section_census(const BundleType& e, const SmallField& f, int r) {
  const int n = e.rank();
  const VecOps ops{f, n};
  const int lo = e.min_degree() - f.d, hi = e.max_degree();
  std::map<BundleType, Integer> census;
  for (const auto& w : all_subspaces(f, n, n - r)) {
    // Elements of w split into coordinates and their residue degrees.
    std::vector<std::vector<int>> coord_deg;
    for (int code : w) {
      std::vector<int> dg;
      for (int a : ops.split(code)) {
        const auto c = f.coords(a);
        int top = -1;
        for (int i = 0; i < f.d; ++i)
          if (c[static_cast<std::size_t>(i)]) top = i;
        dg.push_back(top);
      }
      coord_deg.push_back(std::move(dg));
    }
    // h0(E'(k)) = dim sections of E(k) - dim image of evaluation + log |W cap image|
    auto h0 = [&](int k) {
      int sections = 0, image = 0;
      for (int i = 0; i < n; ++i) {
        const int dim = std::max(0, e[static_cast<std::size_t>(i)] + k + 1);
        sections += dim;
        image += std::min(dim, f.d);
      }
      Integer hits = 0;
      for (const auto& dg : coord_deg) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          const int top = dg[static_cast<std::size_t>(i)];
          ok = top < 0 || top <= e[static_cast<std::size_t>(i)] + k;
        }
        if (ok) ++hits;
      }
      return sections - image + log_p(hits, f.p);
    };
    // c(k) = #{a_i >= -k}; count of degree v = c(-v) - c(-v-1)
    auto c = [&](int k) { return h0(k) - h0(k - 1); };
    std::vector<int> degs;
    for (int v = lo; v <= hi; ++v)
      for (int m = c(-v) - c(-v - 1); m > 0; --m) degs.push_back(v);
    if (static_cast<int>(degs.size()) != n) throw std::logic_error("section scan found the wrong rank");
    census[BundleType(degs)] += 1;
  }
  return census;
}

namespace {

std::map<BundleType, QPoly> rank2_table(int d1, int d2, int d, bool printed) {
  const QPoly q = QPoly::q();
  auto qp = [](long k) { return QPoly::monomial(1, static_cast<std::size_t>(k)); };
  std::map<BundleType, QPoly> t;
  auto put = [&](int a, int b, const QPoly& m) { t[BundleType({a, b})] += m; };
  const int g = d2 - d1;
  if (g >= d) {
    put(d1, d2 - d, qp(d));
    put(d1 - d, d2, 1);
  } else if (g > 0) {
    const int ell = (d - g - 1) / 2;
    put(d1, d2 - d, qp(g + 1));
    put(d1 - d, d2, 1);
    for (int i = 1; i <= ell; ++i)
      put(d1 - i, d2 - d + i, printed ? qp(2 * i + 2) - qp(2 * i) : qp(g + 2 * i + 1) - qp(g + 2 * i - 1));
    if ((g + d) % 2 == 0) put((d1 + d2 - d) / 2, (d1 + d2 - d) / 2, qp(d) - qp(d - 1));
  } else {
    if (d % 2 == 0) put(d1 - d / 2, d1 - d / 2, qp(d) - qp(d - 1));
    put(d1 - d, d1, q + 1);
    for (int i = 1; i <= (d - 1) / 2; ++i) put(d1 - d + i, d1 - i, qp(2 * i + 1) - qp(2 * i - 1));
  }
  return t;
}

}  // namespace

std::map<BundleType, QPoly> rank2_printed(int d1, int d2, int d) { return rank2_table(d1, d2, d, true); }
std::map<BundleType, QPoly> rank2_corrected(int d1, int d2, int d) { return rank2_table(d1, d2, d, false); }

std::vector<BundleType> bundle_grid(int n, int lo, int hi) {
  std::vector<BundleType> out;
  std::vector<int> v;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(v.size()) == n) {
      out.emplace_back(v);
      return;
    }
    for (int x = from; x <= hi; ++x) {
      v.push_back(x);
      rec(x);
      v.pop_back();
    }
  };
  rec(lo);
  return out;
}

}  // namespace oracle
