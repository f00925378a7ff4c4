#include "heckelab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "heckelab/errors.hpp"

namespace heckelab {

// ---------------------------------------------------------------- FiniteField

FiniteField::FiniteField(std::uint32_t p, const FqPoly& modulus) : p_(p), d_(modulus.degree()), size_(1), mod_(modulus) {
  if (!is_prime(p)) throw DomainError("finite field needs a prime characteristic");
  if (modulus.modulus() != p) throw DomainError("modulus defined over a different prime field");
  if (d_ < 1 || !modulus.is_monic() || !is_irreducible(modulus))
    throw DomainError("field modulus must be monic irreducible: " + modulus.to_string());
  for (int i = 0; i < d_; ++i) {
    size_ *= p;
    if (size_ > 1024) throw ResourceError("extension field too large for table arithmetic");
  }
  add_.resize(std::size_t{size_} * size_);
  mul_.resize(std::size_t{size_} * size_);
  neg_.resize(size_);
  std::vector<FqPoly> lifts;
  std::vector<std::vector<std::uint32_t>> cs;
  for (std::uint32_t a = 0; a < size_; ++a) {
    lifts.push_back(lift(a));
    cs.push_back(coords(a));
  }
  for (std::uint32_t a = 0; a < size_; ++a) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(d_));
    for (int k = 0; k < d_; ++k) c[static_cast<std::size_t>(k)] = (p_ - cs[a][static_cast<std::size_t>(k)]) % p_;
    neg_[a] = encode(c);
    for (std::uint32_t b = 0; b < size_; ++b) {
      for (int k = 0; k < d_; ++k) {
        const auto u = static_cast<std::size_t>(k);
        c[u] = (cs[a][u] + cs[b][u]) % p_;
      }
      add_[a * size_ + b] = encode(c);
      mul_[a * size_ + b] = b < a ? mul_[b * size_ + a] : reduce(lifts[a] * lifts[b]);
    }
  }
}

std::uint32_t FiniteField::encode(const std::vector<std::uint32_t>& c) const {
  std::uint32_t x = 0;
  for (std::size_t k = c.size(); k-- > 0;) x = x * p_ + c[k];
  return x;
}

std::vector<std::uint32_t> FiniteField::coords(std::uint32_t a) const {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(d_));
  for (auto& x : c) {
    x = a % p_;
    a /= p_;
  }
  return c;
}

FqPoly FiniteField::lift(std::uint32_t a) const {
  const auto c = coords(a);
  return FqPoly(p_, std::vector<long>(c.begin(), c.end()));
}

std::uint32_t FiniteField::reduce(const FqPoly& f) const {
  const FqPoly r = FqPoly::divmod(f, mod_).second;
  std::vector<std::uint32_t> c(static_cast<std::size_t>(d_));
  for (int k = 0; k < d_; ++k) c[static_cast<std::size_t>(k)] = r.coeff(static_cast<std::size_t>(k));
  return encode(c);
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) throw ArithmeticError("inverse of zero in F_{q^d}");
  for (std::uint32_t b = 1; b < size_; ++b)
    if (mul(a, b) == 1) return b;
  throw IdentityViolation("field element without inverse; modulus not irreducible?");
}

// ---------------------------------------------------------------- subspaces

std::vector<std::vector<int>> schubert_cells(int n, int k) {
  if (k < 0 || k > n) throw DomainError("schubert_cells: need 0 <= k <= n");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int c = start; c <= n - (k - static_cast<int>(cur.size())); ++c) {
      cur.push_back(c);
      rec(c + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

void for_each_subspace_in_cell(const FiniteField& f, int n, const std::vector<int>& pivots,
                               const std::function<void(const FiberSubspace&)>& fn) {
  FiberSubspace w;
  w.n = n;
  w.pivots = pivots;
  w.rows.assign(pivots.size(), std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0));
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free_pos;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    w.rows[i][static_cast<std::size_t>(pivots[i])] = 1;
    for (int c = pivots[i] + 1; c < n; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)]) free_pos.emplace_back(i, static_cast<std::size_t>(c));
  }
  while (true) {
    fn(w);
    std::size_t k = 0;
    for (; k < free_pos.size(); ++k) {
      auto& x = w.rows[free_pos[k].first][free_pos[k].second];
      if (++x < f.size()) break;
      x = 0;
    }
    if (k == free_pos.size()) return;
  }
}

namespace {

void check_subspace_budget(int n, int r, const FiniteField& f, const OracleBudget& budget) {
  const Integer count = gaussian_binomial(static_cast<unsigned>(n - r), static_cast<unsigned>(n)).eval(Integer(f.size()));
  if (count > Integer(std::to_string(budget.subspaces)))
    throw ResourceError("subspace enumeration needs " + count.get_str() + " > budget " + std::to_string(budget.subspaces));
}

// Rank over F_p of a list of row vectors (destroys the input).
int rank_mod_p(std::vector<std::vector<std::uint32_t>>& m, std::uint32_t p) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  int rank = 0;
  std::size_t row = 0;
  FqPoly helper(p);
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const std::uint64_t iv = helper.inv(m[row][c]);
    for (auto& x : m[row]) x = static_cast<std::uint32_t>(x * iv % p);
    for (std::size_t i = row + 1; i < m.size(); ++i) {
      const std::uint64_t f = m[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = static_cast<std::uint32_t>((m[i][j] + p - f * m[row][j] % p) % p);
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<FiberSubspace> enumerate_subspaces(int n, int r, const FiniteField& f, const OracleBudget& budget) {
  if (n < 0 || r < 0 || r > n) throw DomainError("enumerate_subspaces: need 0 <= r <= n");
  check_subspace_budget(n, r, f, budget);
  std::vector<FiberSubspace> out;
  for (const auto& cell : schubert_cells(n, n - r))
    for_each_subspace_in_cell(f, n, cell, [&](const FiberSubspace& w) { out.push_back(w); });
  return out;
}

BundleType splitting_type(const BundleType& e, const FiberSubspace& w, const ClosedPoint& x) {
  return splitting_type(e, w, FiniteField(x));
}

BundleType splitting_type(const BundleType& e, const FiberSubspace& w, const FiniteField& f) {
  const int n = e.rank();
  if (w.n != n) throw DomainError("subspace lives in the wrong fiber dimension");
  const int d = f.degree();
  const int r = n - w.dim();
  // W is cut out by one functional per non-pivot column c:
  //   v_c - sum_j W[j][c] v_{pivot_j} = 0.
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : w.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<std::uint32_t>> func;  // func[c][i] in F_{q^d}
  for (int c = 0; c < n; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    std::vector<std::uint32_t> a(static_cast<std::size_t>(n), 0);
    a[static_cast<std::size_t>(c)] = 1;
    for (std::size_t j = 0; j < w.pivots.size(); ++j)
      a[static_cast<std::size_t>(w.pivots[j])] = f.neg(w.rows[j][static_cast<std::size_t>(c)]);
    func.push_back(std::move(a));
  }
  const int maxd = e.max_degree(), mind = e.min_degree();
  const int k_lo = -maxd - 1, k_hi = d - mind;
  // residues of t^e
  std::vector<std::uint32_t> pw{1};
  const std::uint32_t t_idx = f.reduce(FqPoly::monomial(f.p(), 1, 1));
  while (static_cast<int>(pw.size()) <= maxd + k_hi + 1) pw.push_back(f.mul(pw.back(), t_idx));

  auto h0 = [&](int k) -> long {
    std::vector<std::vector<std::uint32_t>> rows;
    for (int i = 0; i < n; ++i) {
      for (int ex = 0; ex <= e[static_cast<std::size_t>(i)] + k; ++ex) {
        std::vector<std::uint32_t> v;
        v.reserve(static_cast<std::size_t>(r * d));
        for (const auto& a : func) {
          const auto c = f.coords(f.mul(a[static_cast<std::size_t>(i)], pw[static_cast<std::size_t>(ex)]));
          v.insert(v.end(), c.begin(), c.end());
        }
        rows.push_back(std::move(v));
      }
    }
    const long total = static_cast<long>(rows.size());
    if (r == 0) return total;
    return total - rank_mod_p(rows, f.p());
  };
  std::vector<long> h(static_cast<std::size_t>(k_hi - k_lo + 1));
  for (int k = k_lo; k <= k_hi; ++k) h[static_cast<std::size_t>(k - k_lo)] = h0(k);
  // c(k) = h0(k) - h0(k-1) = #{i : d'_i >= -k}
  auto c = [&](int k) -> long {
    if (k <= k_lo) return 0;
    return h[static_cast<std::size_t>(k - k_lo)] - h[static_cast<std::size_t>(k - 1 - k_lo)];
  };
  std::vector<int> degs;
  for (int v = maxd; v >= mind - d; --v) {
    const long cnt = c(-v) - c(-v - 1);
    if (cnt < 0) throw IdentityViolation("negative jump in section counts");
    for (long i = 0; i < cnt; ++i) degs.push_back(v);
  }
  if (static_cast<int>(degs.size()) != n)
    throw IdentityViolation("section counts recovered " + std::to_string(degs.size()) + " summands, expected " +
                            std::to_string(n));
  BundleType out(degs);
  if (out.degree() != e.degree() - static_cast<long>(r) * d)
    throw IdentityViolation("recovered splitting type " + out.to_string() + " has the wrong degree");
  return out;
}

std::map<BundleType, Integer> brute_multiplicity(const BundleType& e, const ClosedPoint& x, int r,
                                                 const OracleBudget& budget, unsigned threads) {
  const int n = e.rank();
  if (r < 0 || r > n) throw DomainError("brute_multiplicity: need 0 <= r <= rank");
  const FiniteField f(x);
  check_subspace_budget(n, r, f, budget);
  const auto cells = schubert_cells(n, n - r);
  std::map<BundleType, Integer> census;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::map<BundleType, long> local;
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();)
      for_each_subspace_in_cell(f, n, cells[i], [&](const FiberSubspace& w) { ++local[splitting_type(e, w, f)]; });
    std::lock_guard<std::mutex> lock(mu);
    for (const auto& [b, c] : local) census[b] += c;
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  Integer total = 0;
  for (const auto& [b, c] : census) total += c;
  const Integer want = gaussian_binomial(static_cast<unsigned>(n - r), static_cast<unsigned>(n)).eval(Integer(f.size()));
  if (total != want) throw IdentityViolation("census total " + total.get_str() + " != #Gr = " + want.get_str());
  return census;
}

// ---------------------------------------------------------------- matrices

PolyMatrix identity_matrix(std::uint32_t p, int n) {
  PolyMatrix m(static_cast<std::size_t>(n), std::vector<FqPoly>(static_cast<std::size_t>(n), FqPoly(p)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = FqPoly::constant(p, 1);
  return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size()) throw DomainError("matrix shapes do not match");
  const std::uint32_t p = b[0][0].modulus();
  PolyMatrix c(a.size(), std::vector<FqPoly>(b[0].size(), FqPoly(p)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

FqPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  const std::uint32_t p = m[0][0].modulus();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  FqPoly det(p);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<FqPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const FqPoly term = m[0][j] * determinant(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

PolyMatrix make_matrix(std::uint32_t p, const std::vector<std::vector<std::vector<long>>>& entries) {
  PolyMatrix m;
  for (const auto& row : entries) {
    std::vector<FqPoly> r;
    for (const auto& c : row) r.emplace_back(p, c);
    m.push_back(std::move(r));
  }
  return m;
}

SmithForm smith_normal_form(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("smith_normal_form of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("smith_normal_form needs a square matrix");
  const std::uint32_t p = m[0][0].modulus();
  PolyMatrix a = m;
  PolyMatrix left = identity_matrix(p, static_cast<int>(n)), right = left;
  // Invariant: m = left * a * right.
  auto row_add = [&](std::size_t i, std::size_t j, const FqPoly& c) {  // row_i += c row_j
    for (std::size_t k = 0; k < n; ++k) a[i][k] += c * a[j][k];
    for (std::size_t k = 0; k < n; ++k) left[k][j] -= c * left[k][i];
  };
  auto col_add = [&](std::size_t i, std::size_t j, const FqPoly& c) {  // col_j += c col_i
    for (std::size_t k = 0; k < n; ++k) a[k][j] += c * a[k][i];
    for (std::size_t k = 0; k < n; ++k) right[i][k] -= c * right[j][k];
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (std::size_t k = 0; k < n; ++k) std::swap(left[k][i], left[k][j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
    std::swap(right[i], right[j]);
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (!a[i][j].is_zero() && (bi == n || a[i][j].degree() < a[bi][bj].degree())) {
            bi = i;
            bj = j;
          }
      if (bi == n) throw DomainError("smith_normal_form: matrix is singular");
      swap_rows(t, bi);
      swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t].is_zero()) continue;
        auto [qt, rem] = FqPoly::divmod(a[i][t], a[t][t]);
        row_add(i, t, -qt);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j].is_zero()) continue;
        auto [qt, rem] = FqPoly::divmod(a[t][j], a[t][t]);
        col_add(t, j, -qt);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!FqPoly::divmod(a[i][j], a[t][t]).second.is_zero()) {
            bad = i;
            break;
          }
      if (bad == n) break;
      row_add(t, bad, FqPoly::constant(p, 1));
    }
    const std::uint32_t u = a[t][t].leading();
    const std::uint32_t ui = a[t][t].inv(u);
    for (std::size_t k = 0; k < n; ++k) a[t][k] = a[t][k].scaled(ui);
    for (std::size_t k = 0; k < n; ++k) left[k][t] = left[k][t].scaled(u);
  }
  SmithForm sf;
  PolyMatrix dmat(n, std::vector<FqPoly>(n, FqPoly(p)));
  for (std::size_t i = 0; i < n; ++i) {
    sf.diag.push_back(a[i][i]);
    dmat[i][i] = a[i][i];
  }
  sf.left = std::move(left);
  sf.right = std::move(right);
  if (mat_mul(mat_mul(sf.left, dmat), sf.right) != m)
    throw IdentityViolation("Smith form does not reproduce the input matrix");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!FqPoly::divmod(sf.diag[i + 1], sf.diag[i]).second.is_zero())
      throw IdentityViolation("Smith form diagonal fails the divisibility chain");
  return sf;
}

PolyMatrix modification_lattice(const FiberSubspace& w, const FiniteField& f) {
  const auto n = static_cast<std::size_t>(w.n);
  PolyMatrix m(n, std::vector<FqPoly>(n, FqPoly(f.p())));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t j = 0; j < w.pivots.size(); ++j) {
    const auto c = static_cast<std::size_t>(w.pivots[j]);
    is_pivot[c] = true;
    for (std::size_t i = 0; i < n; ++i) m[i][c] = f.lift(w.rows[j][i]);
  }
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) m[c][c] = f.modulus();
  return m;
}

namespace {

// Enumerate all matrices whose entry (i, j) ranges over polynomials of degree
// <= bound[i][j] (nothing but zero when negative) and count those accepted.
Integer count_matrices(std::uint32_t p, const std::vector<std::vector<int>>& bound, const OracleBudget& budget,
                       const std::function<bool(const FqPoly&)>& accept) {
  const std::size_t n = bound.size();
  long slots = 0;
  for (const auto& row : bound)
    for (int b : row) slots += std::max(0, b + 1);
  const Integer total = ipow(Integer(p), static_cast<unsigned long>(slots));
  if (total > Integer(std::to_string(budget.matrices)))
    throw ResourceError("matrix enumeration needs " + total.get_str() + " > budget " + std::to_string(budget.matrices));
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(slots), 0);
  Integer count = 0;
  PolyMatrix m(n, std::vector<FqPoly>(n, FqPoly(p)));
  while (true) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int b = bound[i][j];
        std::vector<long> c;
        for (int k = 0; k <= b; ++k) c.push_back(digits[pos++]);
        m[i][j] = FqPoly(p, c);
      }
    if (accept(determinant(m))) ++count;
    std::size_t k = 0;
    for (; k < digits.size(); ++k) {
      if (++digits[k] < p) break;
      digits[k] = 0;
    }
    if (k == digits.size()) break;
  }
  return count;
}

}  // namespace

Integer brute_aut_order(const BundleType& e, std::uint32_t q, const OracleBudget& budget) {
  if (!is_prime(q)) throw DomainError("brute_aut_order needs prime q");
  const auto n = static_cast<std::size_t>(e.rank());
  std::vector<std::vector<int>> bound(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bound[i][j] = e[i] - e[j];
  return count_matrices(q, bound, budget, [](const FqPoly& det) { return det.degree() == 0; });
}

Integer count_monomorphisms(const BundleType& e_prime, const BundleType& e, const ClosedPoint& x,
                            const OracleBudget& budget) {
  if (e_prime.rank() != e.rank()) throw DomainError("rank mismatch in count_monomorphisms");
  const FqPoly& pol = x.poly();
  if (e.degree() - e_prime.degree() != x.degree())
    throw DomainError("count_monomorphisms needs deg E - deg E' = deg x");
  const auto n = static_cast<std::size_t>(e.rank());
  std::vector<std::vector<int>> bound(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bound[i][j] = e[i] - e_prime[j];
  return count_matrices(x.q(), bound, budget, [&](const FqPoly& det) { return !det.is_zero() && det.monic() == pol; });
}

}  // namespace heckelab
