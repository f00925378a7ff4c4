#include "heckelab/forms.hpp"

#include <functional>

#include "heckelab/errors.hpp"
#include "heckelab/hall.hpp"

namespace heckelab {

namespace {

// Non-decreasing sequences of length len with entries in [lo, hi].
void for_each_sorted(int len, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(v.size()) == len) {
      fn(v);
      return;
    }
    for (int x = from; x <= hi; ++x) {
      v.push_back(x);
      rec(x);
      v.pop_back();
    }
  };
  rec(lo);
}

}  // namespace

TruncatedPBun::TruncatedPBun(int n, int spread) : n_(n), spread_(spread) {
  if (n < 1) throw DomainError("rank must be >= 1");
  if (spread < 0) throw DomainError("spread bound must be >= 0");
  for_each_sorted(n - 1, 0, spread, [&](const std::vector<int>& tail) {
    std::vector<int> d{0};
    d.insert(d.end(), tail.begin(), tail.end());
    index_.emplace(BundleType(d), classes_.size());
    classes_.emplace_back(std::move(d));
  });
}

std::optional<std::size_t> TruncatedPBun::index_of(const BundleType& b) const {
  if (b.rank() != n_) return std::nullopt;
  auto it = index_.find(proj_class(b).bundle);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<HeckeRow> hecke_matrix(const TruncatedPBun& space, int r, const MultOptions& opt) {
  const int n = space.rank();
  if (r < 1 || r > n - 1) throw DomainError("Hecke operator weight must be in [1, n-1]");
  std::vector<HeckeRow> rows;
  for (std::size_t i = 0; i < space.size(); ++i) {
    HeckeRow row;
    row.cls = i;
    for (const auto& [ep, nb] : neighbors(space.at(i), 1, r, opt)) {
      auto j = space.index_of(ep);
      if (!j) {
        row.complete = false;
        continue;
      }
      row.entries[*j] += nb.multiplicity;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational FormVector::at(const BundleType& b) const {
  auto i = space.index_of(b);
  if (!i) throw DomainError("class " + b.to_string() + " lies outside the truncation");
  return values[*i];
}

bool FormVector::is_zero() const {
  for (const auto& v : values)
    if (v != 0) return false;
  return true;
}

// ---------------------------------------------------------------- linear algebra

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

}  // namespace

int nullity(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  return static_cast<int>(unknowns - rref(rows, unknowns).size());
}

std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  const auto piv = rref(rows, unknowns);
  std::vector<bool> is_piv(unknowns, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t fcol = 0; fcol < unknowns; ++fcol) {
    if (is_piv[fcol]) continue;
    std::vector<Rational> v(unknowns, Rational(0));
    v[fcol] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][fcol];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Rational>> eigen_system(const EigenQuery& q) {
  if (q.n < 2) throw DomainError("eigenforms need n >= 2");
  if (static_cast<int>(q.lambda.size()) != q.n - 1)
    throw DomainError("need exactly n-1 eigenvalues, got " + std::to_string(q.lambda.size()));
  if (q.q < 2) throw DomainError("q must be >= 2");
  const TruncatedPBun space(q.n, q.spread + 1);
  const Integer q0(q.q);
  std::vector<std::vector<Rational>> sys;
  for (int r = 1; r <= q.n - 1; ++r) {
    for (const auto& row : hecke_matrix(space, r)) {
      if (!row.complete) continue;
      std::vector<Rational> eq(space.size(), Rational(0));
      for (const auto& [j, m] : row.entries) eq[j] += Rational(m.eval(q0));
      eq[row.cls] -= q.lambda[static_cast<std::size_t>(r - 1)];
      sys.push_back(std::move(eq));
    }
  }
  return sys;
}

EigenResult eigenform_solve(const EigenQuery& q, const Rational& e0) {
  const TruncatedPBun space(q.n, q.spread + 1);
  auto sys = eigen_system(q);
  const auto basis = nullspace(sys, space.size());
  if (basis.size() != 1)
    throw IdentityViolation("eigen-system nullity is " + std::to_string(basis.size()) + ", expected 1");
  const auto& v = basis[0];
  if (v[0] == 0) throw IdentityViolation("eigenform vanishes at E_0 but is nonzero");
  EigenResult res{FormVector{space, {}}, 1};
  for (const auto& x : v) {
    Rational y = e0 * x / v[0];
    y.canonicalize();
    res.form.values.push_back(y);
  }
  return res;
}

// ---------------------------------------------------------------- toroidal

BundleType trace_bundle(int n, int k) { return BundleType(std::vector<int>(static_cast<std::size_t>(n), k)); }

std::vector<int> toroidal_representatives(int /*n*/) {
  // Pic(P^1_n) = Z via degree and p^* O(1) = O(1), so p^* is onto.
  return {0};
}

Rational toroidal_sum(const FormVector& f) {
  Rational s = 0;
  for (int k : toroidal_representatives(f.space.rank())) s += f.at(trace_bundle(f.space.rank(), k));
  return s;
}

int toroidal_constrained_nullity(const EigenQuery& q) {
  const TruncatedPBun space(q.n, q.spread + 1);
  auto sys = eigen_system(q);
  std::vector<Rational> tor(space.size(), Rational(0));
  for (int k : toroidal_representatives(q.n)) tor[*space.index_of(trace_bundle(q.n, k))] += 1;
  sys.push_back(std::move(tor));
  return nullity(std::move(sys), space.size());
}

// ---------------------------------------------------------------- cusp sums

std::map<BundleType, Integer> extension_middle_distribution(const BundleType& f, const BundleType& g, long q0) {
  if (q0 < 2) throw DomainError("q0 must be >= 2");
  const Integer q(q0);
  const Integer hom = ipow(q, static_cast<unsigned long>(hom_dim(f, g)));
  const Integer scale = hom * aut_order(f, q) * aut_order(g, q);
  std::map<BundleType, Integer> out;
  Integer total = 0;
  const HallElement prod = bundle_product(f, g);
  for (const auto& [t, phi] : prod.terms()) {
    const Rational val = phi.eval(q) * Rational(scale) / Rational(aut_order(t.bundle, q));
    if (val.get_den() != 1 || val < 0)
      throw IdentityViolation("extension count for " + t.bundle.to_string() + " is " + val.get_str());
    if (val == 0) continue;
    out.emplace(t.bundle, val.get_num());
    total += val.get_num();
  }
  const Integer want = ipow(q, static_cast<unsigned long>(ext1_dim(f, g)));
  if (total != want)
    throw IdentityViolation("extension mass for (" + f.to_string() + ", " + g.to_string() + ") is " +
                            total.get_str() + ", expected " + want.get_str());
  return out;
}

std::map<std::pair<BundleType, BundleType>, Rational> cusp_defect(const FormVector& f, int n1, int n2, long q0) {
  if (n1 < 1 || n2 < 1 || n1 + n2 != f.space.rank()) throw DomainError("cusp_defect needs n1 + n2 = n, both >= 1");
  const int dmax = f.space.spread();
  std::map<std::pair<BundleType, BundleType>, Rational> out;
  for_each_sorted(n1, 0, dmax, [&](const std::vector<int>& fd) {
    for_each_sorted(n2, 0, dmax, [&](const std::vector<int>& gd) {
      if (std::min(fd.front(), gd.front()) != 0) return;
      const BundleType bf(fd), bg(gd);
      Rational s = 0;
      for (const auto& [b, c] : extension_middle_distribution(bf, bg, q0)) {
        if (!f.space.index_of(b)) return;
        s += Rational(c) * f.at(b);
      }
      out.emplace(std::make_pair(bf, bg), s);
    });
  });
  return out;
}

}  // namespace heckelab
