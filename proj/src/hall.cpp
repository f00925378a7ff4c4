#include "heckelab/hall.hpp"

#include <sstream>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

QPoly qpow(long k) { return QPoly::monomial(1, static_cast<std::size_t>(k)); }

// prod_i [l_i]_q! over the runs of a sorted word: the factor with
// O(e_1)*...*O(e_k) = prod [l_i]! (O(e_1)+...+O(e_k)).
QPoly run_factorials(const std::vector<int>& w) {
  QPoly f(1);
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    f *= q_factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return f;
}

}  // namespace

// ---------------------------------------------------------------- HallElement

HallElement HallElement::single(HallTerm t, QRat c) {
  HallElement h;
  h.add(t, c);
  return h;
}

void HallElement::add(const HallTerm& t, const QRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

QRat HallElement::coeff(const HallTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? QRat(0) : it->second;
}

HallElement& HallElement::operator+=(const HallElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

HallElement HallElement::scaled(const QRat& c) const {
  HallElement h;
  if (c.is_zero()) return h;
  for (const auto& [t, x] : terms_) h.terms_.emplace(t, x * c);
  return h;
}

std::string HallElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*[" << t.bundle.to_string();
    if (t.torsion > 0) os << "+K^" << t.torsion;
    os << "]";
  }
  return os.str();
}

HallElement vec_part(const HallElement& h) {
  HallElement v;
  for (const auto& [t, c] : h.terms())
    if (t.torsion == 0) v.add(t, c);
  return v;
}

// ---------------------------------------------------------------- straightening

HallEngine::WordSum HallEngine::straighten(const std::vector<int>& word) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(word);
    if (it != memo_.end()) return it->second;
  }
  // rightmost inversion
  std::size_t pos = word.size();
  for (std::size_t i = word.size(); i-- > 1;) {
    if (word[i - 1] > word[i]) {
      pos = i - 1;
      break;
    }
  }
  WordSum out;
  if (pos == word.size()) {
    out.emplace(word, QPoly(1));
  } else {
    // O(n)*O(m), n > m:
    //   q^{n-m+1} O(m)*O(n) + sum_{0<i<(n-m)/2} (q^2-1) q^{n-m-1} O(m+i)*O(n-i)
    //   + [n-m even] (q-1) q^{n-m-1} O(c)*O(c),  c = (n+m)/2
    // where the last term is (q^2-1) q^{n-m-1} [O(c)+O(c)] rewritten through
    // O(c)*O(c) = (q+1) [O(c)+O(c)].
    const int n = word[pos], m = word[pos + 1];
    auto emit = [&](int a, int b, const QPoly& c) {
      std::vector<int> w = word;
      w[pos] = a;
      w[pos + 1] = b;
      for (auto& [u, x] : straighten(w)) {
        auto [it, inserted] = out.emplace(u, x * c);
        if (!inserted) {
          it->second += x * c;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    };
    emit(m, n, qpow(n - m + 1));
    const QPoly mid = (qpow(2) - QPoly(1)) * qpow(n - m - 1);
    for (int i = 1; 2 * i < n - m; ++i) emit(m + i, n - i, mid);
    if ((n - m) % 2 == 0) emit((n + m) / 2, (n + m) / 2, (QPoly::q() - QPoly(1)) * qpow(n - m - 1));
  }
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(word, out);
  return out;
}

HallElement HallEngine::classes_of(const WordSum& ws) {
  HallElement h;
  for (const auto& [w, c] : ws) h.add(HallTerm{BundleType(w), 0}, QRat(c * run_factorials(w)));
  return h;
}

HallElement HallEngine::word_product(const std::vector<int>& degrees) {
  if (degrees.empty()) throw DomainError("word_product of an empty word");
  return classes_of(straighten(degrees));
}

HallElement HallEngine::bundle_product(const BundleType& f, const BundleType& g) {
  std::vector<int> w = f.degrees();
  w.insert(w.end(), g.degrees().begin(), g.degrees().end());
  return word_product(w).scaled(q_factor(f) * q_factor(g));
}

// ---------------------------------------------------------------- K_x^r * E

HallElement HallEngine::kx_times(int r, const BundleType& e, int d, KxMethod method) {
  if (r < 1) throw DomainError("kx_times needs r >= 1");
  if (d < 1) throw DomainError("point degree must be >= 1");
  const int n = e.rank();
  HallElement out;
  if (method == KxMethod::closed) {
    for (int i = 0; i <= std::min(r, n); ++i) {
      for (const auto& sigma : enumerate_deltas(n, i)) {
        std::vector<int> w = e.degrees();
        for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] += sigma[static_cast<std::size_t>(j)] * d;
        const QRat c(qpow(weight_with_total(sigma, r) * d));
        const HallElement wp = word_product(w);
        for (const auto& [t, x] : wp.terms()) out.add(HallTerm{t.bundle, r - i}, x * c);
      }
    }
    return out.scaled(q_factor(e));
  }
  // Right-multiply (B + K^s) by each O(d_j) in turn, with B + K^s = B * K^s,
  // K^s * O(m) = O(m+d) * K^{s-1} + q^{sd} O(m) * K^s and
  // B * O(m) = Q(B) word(B ++ [m]).
  using State = std::map<std::pair<std::vector<int>, int>, QRat>;
  State st;
  st[{{}, r}] = QRat(1);
  auto push = [](State& s, std::vector<int> b, int tors, const QRat& c) {
    auto key = std::make_pair(std::move(b), tors);
    auto it = s.find(key);
    if (it == s.end()) {
      if (!c.is_zero()) s.emplace(std::move(key), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) s.erase(it);
    }
  };
  for (int m : e.degrees()) {
    State next;
    for (const auto& [key, c] : st) {
      const auto& [b, s] = key;
      auto attach = [&](int deg, int tors, const QRat& coef) {
        if (b.empty()) {
          push(next, {deg}, tors, coef);
          return;
        }
        std::vector<int> w = b;
        w.push_back(deg);
        const QRat scale = coef * q_factor(BundleType(b));
        const HallElement wp = word_product(w);
        for (const auto& [t, x] : wp.terms()) push(next, t.bundle.degrees(), tors, x * scale);
      };
      if (s == 0) {
        attach(m, 0, c);
      } else {
        attach(m + d, s - 1, c);
        attach(m, s, c * QRat(qpow(static_cast<long>(s) * d)));
      }
    }
    st = std::move(next);
  }
  for (const auto& [key, c] : st) out.add(HallTerm{BundleType(key.first), key.second}, c);
  return out.scaled(q_factor(e));
}

HallElement HallEngine::multiply(const HallElement& a, const HallElement& b, int d) {
  HallElement out;
  for (const auto& [t1, c1] : a.terms()) {
    for (const auto& [t2, c2] : b.terms()) {
      if (t1.torsion > 0 && t2.torsion > 0)
        throw DomainError("product of two torsion classes leaves the semisimple span");
      // (B1 + K^s1) * (B2 + K^s2) = B1 * (K^s1 * B2) * K^s2
      HallElement mid = t1.torsion > 0 ? kx_times(t1.torsion, t2.bundle, d) : HallElement::single({t2.bundle, 0});
      for (const auto& [t3, c3] : mid.terms()) {
        const QRat c = c1 * c2 * c3;
        const HallElement bp = bundle_product(t1.bundle, t3.bundle);
        for (const auto& [t4, c4] : bp.terms())
          out.add(HallTerm{t4.bundle, t3.torsion + t2.torsion}, c * c4);
      }
    }
  }
  return out;
}

QPoly HallEngine::hall_multiplicity(const BundleType& e_prime, const BundleType& e, int d, int r) {
  if (e_prime.rank() != e.rank())
    throw DomainError("rank mismatch: " + e_prime.to_string() + " vs " + e.to_string());
  if (r < 0 || d < 1) throw DomainError("need r >= 0 and d >= 1");
  if (e.degree() - e_prime.degree() != static_cast<long>(r) * d) return {};
  if (r == 0) return e == e_prime ? QPoly(1) : QPoly();
  if (r > e.rank()) return {};
  // Only the i = r layer of the closed sum is torsion free.
  QRat acc;
  for (const auto& delta : enumerate_deltas(e.rank(), r)) {
    std::vector<int> w = e_prime.degrees();
    for (std::size_t j = 0; j < w.size(); ++j) w[j] += delta[j] * d;
    const QRat c = word_product(w).coeff(e);
    if (!c.is_zero()) acc += c * QRat(qpow(weight(delta) * d));
  }
  acc *= q_factor(e_prime);
  if (!acc.is_polynomial())
    throw IdentityViolation("Hall number is not a polynomial: m(" + e_prime.to_string() + " -> " + e.to_string() +
                            ") = " + acc.to_string());
  return acc.as_polynomial();
}

std::size_t HallEngine::memo_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

void HallEngine::clear_memo() {
  std::lock_guard<std::mutex> lock(mu_);
  memo_.clear();
}

HallEngine& default_engine() {
  static HallEngine engine;
  return engine;
}

HallElement word_product(const std::vector<int>& degrees) { return default_engine().word_product(degrees); }
HallElement bundle_product(const BundleType& f, const BundleType& g) { return default_engine().bundle_product(f, g); }
HallElement kx_times(int r, const BundleType& e, int d, KxMethod method) {
  return default_engine().kx_times(r, e, d, method);
}
QPoly hall_multiplicity(const BundleType& e_prime, const BundleType& e, int d, int r) {
  return default_engine().hall_multiplicity(e_prime, e, d, r);
}

// ---------------------------------------------------------------- realizing deltas

std::vector<RealizingDelta> realizing_deltas(const BundleType& e_prime, const BundleType& e, int d, int r) {
  if (e_prime.rank() != e.rank()) throw DomainError("rank mismatch in realizing_deltas");
  std::vector<RealizingDelta> out;
  if (r < 0 || r > e.rank()) return out;
  long best = -1;
  for (const auto& delta : enumerate_deltas(e.rank(), r)) {
    std::vector<int> w = e_prime.degrees();
    for (std::size_t j = 0; j < w.size(); ++j) w[j] += delta[j] * d;
    const QRat c = word_product(w).coeff(e);
    if (c.is_zero()) continue;
    RealizingDelta rd{delta, weight(delta), c.as_polynomial(), false, false};
    for (long q0 : {2L, 3L, 4L, 5L})
      if (rd.coeff.eval(Integer(q0)) <= 0) rd.positivity_flag = true;
    best = std::max(best, rd.weight);
    out.push_back(std::move(rd));
  }
  for (auto& rd : out) rd.maximal = rd.weight == best;
  return out;
}

}  // namespace heckelab
