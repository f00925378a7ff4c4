#include "heckelab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "heckelab/bundles.hpp"
#include "heckelab/deltas.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/forms.hpp"
#include "heckelab/hall.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/oracle.hpp"
#include "heckelab/qcalc.hpp"

namespace heckelab::cli {

using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- encoding

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json rational_json(const Rational& x) {
  Rational y = x;
  y.canonicalize();
  return y.get_str();
}

json coeffs_json(const QPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(integer_json(c));
  return a;
}

json degrees_json(const BundleType& b) { return b.degrees(); }

Rational parse_rational(const std::string& s) {
  Rational x;
  if (x.set_str(s, 10) != 0) throw DomainError("not a rational number: '" + s + "'");
  if (x.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  x.canonicalize();
  return x;
}

OracleBudget budget_from_env() {
  OracleBudget b;
  if (const char* env = std::getenv("HECKELAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw DomainError(std::string("bad HECKELAB_BUDGET: '") + env + "'");
    b.subspaces = v;
    b.matrices = v * 10;
  }
  return b;
}

ClosedPoint make_point(unsigned q, const std::vector<long>& poly, int d) {
  if (!poly.empty()) return ClosedPoint(q, poly);
  if (!is_prime(q)) throw DomainError("brute force needs a prime q");
  return ClosedPoint(q, default_point_poly(q, d).to_vector());
}

struct Report {
  json body;
  std::string text;
};

// ---------------------------------------------------------------- subcommands

Report cmd_gr(int k, int n, std::optional<long> q) {
  if (k < 0 || n < 0) throw DomainError("k and n must be non-negative");
  const QPoly g = gaussian_binomial(static_cast<unsigned>(k), static_cast<unsigned>(n));
  Report r;
  r.body = {{"k", k}, {"n", n}, {"poly", coeffs_json(g)}, {"poly_str", g.to_string()}};
  r.text = "Gr(" + std::to_string(k) + "," + std::to_string(n) + ") = " + g.to_string();
  if (q) {
    const Integer v = g.eval(Integer(*q));
    r.body["q"] = *q;
    r.body["value"] = integer_json(v);
    r.text = v.get_str();
  }
  r.text += "\n";
  return r;
}

Report cmd_delta(int n, int rr) {
  Report r;
  json list = json::array();
  std::ostringstream t;
  for (const auto& d : enumerate_deltas(n, rr)) {
    list.push_back({{"bits", d.bits()}, {"weight", weight(d)}, {"omega", omega(d)}});
    for (int b : d.bits()) t << b;
    t << "  |d|=" << weight(d) << "  omega=" << omega(d) << "\n";
  }
  const QPoly sc = schubert_count(n, rr);
  r.body = {{"n", n}, {"r", rr}, {"deltas", list}, {"schubert_count", coeffs_json(sc)},
            {"schubert_count_str", sc.to_string()}};
  t << "sum q^(omega_max - omega) = " << sc.to_string() << "\n";
  r.text = t.str();
  return r;
}

Report hall_report(const HallElement& h, std::optional<long> q) {
  Report r;
  json list = json::array();
  std::ostringstream t;
  for (const auto& [term, c] : h.terms()) {
    json e = {{"degrees", degrees_json(term.bundle)},
              {"torsion", term.torsion},
              {"coeff_num", coeffs_json(c.num())},
              {"coeff_den", coeffs_json(c.den())},
              {"coeff_str", c.to_string()}};
    t << term.bundle.to_string();
    if (term.torsion) t << " + K_x^" << term.torsion;
    t << " : " << c.to_string();
    if (q) {
      const Rational v = c.eval(Integer(*q));
      e["coeff_at_q"] = rational_json(v);
      t << " = " << rational_json(v).get<std::string>();
    }
    t << "\n";
    list.push_back(std::move(e));
  }
  r.body = {{"terms", list}};
  r.text = t.str();
  return r;
}

Report cmd_hall_mul(const std::vector<int>& word, int torsion, int d, std::optional<long> q) {
  if (word.empty()) throw DomainError("--word must list at least one degree");
  HallElement h = word_product(word);
  if (torsion > 0) {
    HallElement acc;
    for (const auto& [term, c] : h.terms()) acc += kx_times(torsion, term.bundle, d).scaled(c);
    h = acc;
  }
  Report r = hall_report(h, q);
  r.body = {{"word", word}, {"torsion", torsion}, {"point_degree", d}, {"terms", r.body["terms"]}};
  return r;
}

Report cmd_hall_mult(const BundleType& from, const BundleType& to, int d, int rr, std::optional<long> q) {
  const QPoly m = hall_multiplicity(from, to, d, rr);
  Report r;
  r.body = {{"from", degrees_json(from)}, {"to", degrees_json(to)}, {"point_degree", d}, {"weight", rr},
            {"multiplicity_poly", coeffs_json(m)}, {"multiplicity_str", m.to_string()}};
  r.text = m.to_string();
  if (q) {
    r.body["multiplicity_at_q"] = integer_json(m.eval(Integer(*q)));
    r.text += " = " + m.eval(Integer(*q)).get_str();
  }
  r.text += "\n";
  return r;
}

Report cmd_hecke_neighbors(const BundleType& e, int d, int rr, std::optional<long> q, bool cross) {
  MultOptions opt;
  opt.cross_check = cross;
  Report r;
  json list = json::array();
  std::ostringstream t;
  QPoly total;
  for (const auto& [ep, nb] : neighbors(e, d, rr, opt)) {
    json x = {{"degrees", degrees_json(ep)},
              {"multiplicity_poly", coeffs_json(nb.multiplicity)},
              {"multiplicity_str", nb.multiplicity.to_string()},
              {"method", to_string(nb.method)}};
    t << ep.to_string() << " : " << nb.multiplicity.to_string();
    if (q) {
      const Integer v = nb.multiplicity.eval(Integer(*q));
      x["multiplicity_at_q"] = integer_json(v);
      t << " = " << v.get_str();
    }
    t << "  [" << to_string(nb.method) << "]\n";
    total += nb.multiplicity;
    list.push_back(std::move(x));
  }
  r.body = {{"bundle", degrees_json(e)}, {"point_degree", d}, {"weight", rr}, {"neighbors", list},
            {"total_poly", coeffs_json(total)}, {"total_str", total.to_string()}};
  t << "total : " << total.to_string();
  if (q) {
    r.body["total_at_q"] = integer_json(total.eval(Integer(*q)));
    t << " = " << total.eval(Integer(*q)).get_str();
  }
  t << "\n";
  r.text = t.str();
  return r;
}

Report cmd_hecke_mult(const BundleType& from, const BundleType& to, int d, int rr, std::optional<long> q, bool cross) {
  MultOptions opt;
  opt.cross_check = cross;
  const ModificationQuery mq{to, from, d, rr};
  const bool ex = exists_modification(mq);
  const MultResult m = multiplicity(mq, opt);
  Report r;
  r.body = {{"from", degrees_json(from)}, {"to", degrees_json(to)}, {"point_degree", d}, {"weight", rr},
            {"exists", ex}, {"multiplicity_poly", coeffs_json(m.value)}, {"multiplicity_str", m.value.to_string()},
            {"method", to_string(m.method)}, {"cross_checked", m.cross_checked}};
  r.text = m.value.to_string();
  if (q) {
    r.body["multiplicity_at_q"] = integer_json(m.value.eval(Integer(*q)));
    r.text += " = " + m.value.eval(Integer(*q)).get_str();
  }
  r.text += "  [" + to_string(m.method) + (m.cross_checked ? ", cross-checked" : "") + "]\n";
  return r;
}

Report cmd_oracle_census(const BundleType& e, unsigned q, const std::vector<long>& poly, int d, int rr,
                         unsigned threads) {
  const ClosedPoint x = make_point(q, poly, d);
  const auto census = brute_multiplicity(e, x, rr, budget_from_env(), threads);
  Report r;
  json list = json::array();
  std::ostringstream t;
  Integer total = 0;
  for (const auto& [ep, c] : census) {  // map order: sorted by splitting type
    list.push_back({{"degrees", degrees_json(ep)}, {"count", integer_json(c)}});
    t << ep.to_string() << " : " << c.get_str() << "\n";
    total += c;
  }
  t << "total : " << total.get_str() << "\n";
  r.body = {{"bundle", degrees_json(e)},
            {"point", {{"q", q}, {"degree", x.degree()}, {"poly", x.poly().to_vector()}}},
            {"weight", rr},
            {"census", list},
            {"total", integer_json(total)}};
  r.text = t.str();
  return r;
}

Report cmd_oracle_snf(unsigned q, const std::string& matrix) {
  json m;
  try {
    m = json::parse(matrix);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("--matrix is not valid JSON: ") + e.what());
  }
  std::vector<std::vector<std::vector<long>>> entries;
  try {
    entries = m.get<std::vector<std::vector<std::vector<long>>>>();
  } catch (const json::exception&) {
    throw DomainError("--matrix must be a JSON array of rows of coefficient arrays");
  }
  if (!is_prime(q)) throw DomainError("q must be prime");
  const SmithForm s = smith_normal_form(make_matrix(q, entries));
  Report r;
  json diag = json::array();
  std::ostringstream t;
  t << "diag(";
  for (std::size_t i = 0; i < s.diag.size(); ++i) {
    diag.push_back({{"coeffs", s.diag[i].to_vector()}, {"str", s.diag[i].to_string()}});
    t << (i ? ", " : "") << s.diag[i].to_string();
  }
  t << ")\n";
  r.body = {{"q", q}, {"diag", diag}};
  r.text = t.str();
  return r;
}

EigenQuery eigen_query(int n, long q, const std::vector<std::string>& lambda, int depth) {
  EigenQuery eq;
  eq.n = n;
  eq.q = q;
  eq.spread = depth;
  for (const auto& s : lambda) eq.lambda.push_back(parse_rational(s));
  if (depth < 0) throw DomainError("--depth must be >= 0");
  return eq;
}

Report cmd_forms_eigen(const EigenQuery& eq) {
  const auto sys = eigen_system(eq);
  const TruncatedPBun space(eq.n, eq.spread + 1);
  const int nul = nullity(sys, space.size());
  Report r;
  r.body = {{"n", eq.n}, {"q", eq.q}, {"depth", eq.spread}, {"nullity", nul}};
  std::ostringstream t;
  t << "nullity " << nul << "\n";
  if (nul == 1) {
    const auto res = eigenform_solve(eq);
    json vals = json::array();
    for (std::size_t i = 0; i < space.size(); ++i) {
      vals.push_back({{"degrees", degrees_json(space.at(i))}, {"value", rational_json(res.form.values[i])}});
      t << space.at(i).to_string() << " : " << res.form.values[i].get_str() << "\n";
    }
    r.body["values"] = vals;
  } else {
    r.body["values"] = json::array();
  }
  r.text = t.str();
  return r;
}

Report cmd_forms_toroidal(const EigenQuery& eq) {
  const auto res = eigenform_solve(eq);
  const Rational s = toroidal_sum(res.form);
  const int nul = toroidal_constrained_nullity(eq);
  Report r;
  json reps = json::array();
  for (int k : toroidal_representatives(eq.n)) reps.push_back({{"k", k}, {"trace_bundle", degrees_json(trace_bundle(eq.n, k))}});
  r.body = {{"n", eq.n}, {"q", eq.q}, {"depth", eq.spread}, {"representatives", reps},
            {"toroidal_sum", rational_json(s)}, {"constrained_nullity", nul}};
  r.text = "toroidal sum of normalized eigenform: " + s.get_str() +
           "\nnullity with toroidal constraint: " + std::to_string(nul) + "\n";
  return r;
}

Report cmd_forms_cusp(const EigenQuery& eq, int n1, int n2) {
  const auto res = eigenform_solve(eq);
  const auto defect = cusp_defect(res.form, n1, n2, eq.q);
  Report r;
  json list = json::array();
  std::ostringstream t;
  bool nonzero = false;
  for (const auto& [fg, v] : defect) {
    list.push_back({{"f", degrees_json(fg.first)}, {"g", degrees_json(fg.second)}, {"defect", rational_json(v)}});
    t << fg.first.to_string() << " , " << fg.second.to_string() << " : " << v.get_str() << "\n";
    nonzero = nonzero || v != 0;
  }
  r.body = {{"n1", n1}, {"n2", n2}, {"q", eq.q}, {"depth", eq.spread}, {"defects", list}, {"any_nonzero", nonzero}};
  t << (nonzero ? "not cuspidal\n" : "all defects vanish\n");
  r.text = t.str();
  return r;
}

// ---------------------------------------------------------------- verify

void for_each_type(int n, int lo, int hi, const std::function<void(const BundleType&)>& fn) {
  std::vector<int> v;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(v.size()) == n) {
      fn(BundleType(v));
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

struct VerifyGrid {
  std::vector<long> qs;   // oracle fields
  int oracle_d, oracle_n, oracle_hi;
  int hall_d, hall_n, hall_hi;
  int assoc_seeds;
};

Report cmd_verify(bool full, unsigned long seed, unsigned threads) {
  const VerifyGrid g = full ? VerifyGrid{{2, 3, 5}, 2, 3, 3, 3, 4, 4, 200} : VerifyGrid{{2}, 2, 3, 2, 2, 3, 2, 20};
  const auto start = std::chrono::steady_clock::now();
  const OracleBudget budget = budget_from_env();
  MultOptions noguard;
  noguard.cross_check = false;
  json mism = json::array();
  long closed_vs_hall = 0, mass = 0, oracle = 0, assoc = 0;

  // closed forms against the Hall engine, plus the neighbor mass
  for (int d = 1; d <= g.hall_d; ++d)
    for (int n = 1; n <= g.hall_n; ++n)
      for_each_type(n, 0, g.hall_hi, [&](const BundleType& e) {
        for (int r = 1; r <= n; ++r) {
          QPoly total;
          for (const auto& [ep, nb] : neighbors(e, d, r, noguard)) {
            const QPoly h = hall_multiplicity(ep, e, d, r);
            ++closed_vs_hall;
            if (h != nb.multiplicity)
              mism.push_back({{"check", "closed_vs_hall"}, {"from", degrees_json(ep)}, {"to", degrees_json(e)},
                              {"d", d}, {"r", r}, {"closed", nb.multiplicity.to_string()}, {"hall", h.to_string()}});
            total += nb.multiplicity;
          }
          ++mass;
          const QPoly want = gaussian_binomial(r, n).substitute_power(d);
          if (total != want)
            mism.push_back({{"check", "mass"}, {"to", degrees_json(e)}, {"d", d}, {"r", r},
                            {"total", total.to_string()}, {"expected", want.to_string()}});
        }
      });

  // brute-force census against closed forms
  for (long q : g.qs)
    for (int d = 1; d <= g.oracle_d; ++d) {
      const ClosedPoint x(static_cast<unsigned>(q), default_point_poly(static_cast<unsigned>(q), d).to_vector());
      for (int n = 1; n <= g.oracle_n; ++n)
        for_each_type(n, 0, g.oracle_hi, [&](const BundleType& e) {
          for (int r = 1; r <= n; ++r) {
            const auto census = brute_multiplicity(e, x, r, budget, threads);
            std::map<BundleType, Integer> closed;
            for (const auto& [ep, nb] : neighbors(e, d, r, noguard)) {
              const Integer v = nb.multiplicity.eval(Integer(q));
              if (v != 0) closed.emplace(ep, v);
            }
            ++oracle;
            if (census != closed) {
              json c = json::object(), b = json::object();
              for (const auto& [k, v] : closed) c[k.to_string()] = integer_json(v);
              for (const auto& [k, v] : census) b[k.to_string()] = integer_json(v);
              mism.push_back({{"check", "oracle"}, {"to", degrees_json(e)}, {"q", q}, {"d", d}, {"r", r},
                              {"closed", c}, {"oracle", b}});
            }
          }
        });
    }

  // associativity of line-bundle products
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(-2, 3);
  for (int s = 0; s < g.assoc_seeds; ++s) {
    const int a = deg(rng), b = deg(rng), c = deg(rng);
    auto one = [](int k) { return HallElement::single(HallTerm{BundleType({k}), 0}); };
    const HallElement lhs = default_engine().multiply(word_product({a, b}), one(c), 1);
    const HallElement rhs = default_engine().multiply(one(a), word_product({b, c}), 1);
    ++assoc;
    if (lhs != rhs)
      mism.push_back({{"check", "associativity"}, {"word", {a, b, c}}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Report r;
  r.body = {{"mode", full ? "full" : "quick"},
            {"seed", seed},
            {"checks", {{"closed_vs_hall", closed_vs_hall}, {"mass", mass}, {"oracle", oracle}, {"associativity", assoc}}},
            {"mismatches", mism},
            {"ok", mism.empty()},
            {"seconds", secs}};
  std::ostringstream t;
  t << "closed vs hall: " << closed_vs_hall << "\nneighbor mass: " << mass << "\noracle census: " << oracle
    << "\nassociativity: " << assoc << "\nmismatches: " << mism.size() << "\n";
  for (const auto& m : mism) t << "  " << m.dump() << "\n";
  t << (mism.empty() ? "OK" : "FAILED") << "\n";
  r.text = t.str();
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hecke modifications of vector bundles on P^1: exact multiplicities and automorphic forms", "heckelab"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::optional<long> q;
  int k = 0, n = 0, r = 1, d = 1, torsion = 0, n1 = 1, n2 = 1, depth = 4;
  unsigned threads = 1;
  unsigned long seed = 12345;
  bool no_cross = false, quick = false, full_grid = false;
  std::vector<int> bundle, from, to, word;
  std::vector<long> poly;
  std::vector<std::string> lambda;
  std::string matrix;

  auto* gr = app.add_subcommand("gr", "Number of k-dimensional subspaces of F_q^n (polynomial, or value with --q)");
  gr->add_option("--k", k, "Subspace dimension")->required();
  gr->add_option("--n", n, "Ambient dimension")->required();
  gr->add_option("--q", q, "Evaluate at this q");

  auto* delta = app.add_subcommand("delta", "List the 0/1 vectors of length n with r ones, their weights and positions");
  delta->add_option("--n", n, "Length")->required();
  delta->add_option("--r", r, "Number of ones")->required();

  auto* hall = app.add_subcommand("hall", "Hall algebra products");
  hall->require_subcommand(1);
  auto* hall_mul = hall->add_subcommand("mul", "Straighten O(e_1)*...*O(e_k), optionally multiplied on the left by K_x^t");
  hall_mul->add_option("--word", word, "Comma-separated line bundle degrees")->required()->delimiter(',');
  hall_mul->add_option("--torsion", torsion, "Power t of K_x on the left")->check(CLI::NonNegativeNumber);
  hall_mul->add_option("--point-degree", d, "Degree of the closed point x")->check(CLI::PositiveNumber);
  hall_mul->add_option("--q", q, "Also evaluate coefficients at q");
  auto* hall_mult = hall->add_subcommand("mult", "Coefficient of E in K_x^r * E'");
  hall_mult->add_option("--bundle-from", from, "E' degrees")->required()->delimiter(',');
  hall_mult->add_option("--bundle-to", to, "E degrees")->required()->delimiter(',');
  hall_mult->add_option("--point-degree", d, "Degree of x")->check(CLI::PositiveNumber);
  hall_mult->add_option("--weight", r, "Weight r")->required();
  hall_mult->add_option("--q", q, "Evaluate at q");

  auto* hecke = app.add_subcommand("hecke", "Hecke modifications by closed formulas");
  hecke->require_subcommand(1);
  auto* hk_nb = hecke->add_subcommand("neighbors", "All E' with [E' -> E] of weight r, with multiplicities");
  hk_nb->add_option("--bundle", bundle, "E degrees")->required()->delimiter(',');
  hk_nb->add_option("--point-degree", d, "Degree of x")->check(CLI::PositiveNumber);
  hk_nb->add_option("--weight", r, "Weight r")->required();
  hk_nb->add_option("--q", q, "Evaluate at q");
  hk_nb->add_flag("--no-cross-check", no_cross, "Skip the Hall-engine guard");
  auto* hk_mult = hecke->add_subcommand("mult", "Existence and multiplicity of [E' -> E]");
  hk_mult->add_option("--bundle-from", from, "E' degrees")->required()->delimiter(',');
  hk_mult->add_option("--bundle-to", to, "E degrees")->required()->delimiter(',');
  hk_mult->add_option("--point-degree", d, "Degree of x")->check(CLI::PositiveNumber);
  hk_mult->add_option("--weight", r, "Weight r")->required();
  hk_mult->add_option("--q", q, "Evaluate at q");
  hk_mult->add_flag("--no-cross-check", no_cross, "Skip the Hall-engine guard");

  auto* oracle = app.add_subcommand("oracle", "Brute force over finite fields (budget: HECKELAB_BUDGET)");
  oracle->require_subcommand(1);
  auto* census = oracle->add_subcommand("census", "Splitting types of all codimension-r subsheaves at x");
  census->add_option("--bundle", bundle, "E degrees")->required()->delimiter(',');
  census->add_option("--q", q, "Prime base field size")->required();
  census->add_option("--poly", poly, "Point polynomial, little-endian coefficients")->delimiter(',');
  census->add_option("--point-degree", d, "Degree of x when --poly is omitted")->check(CLI::PositiveNumber);
  census->add_option("--weight", r, "Weight r")->required();
  census->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  auto* snf = oracle->add_subcommand("snf", "Smith normal form of a square matrix over F_q[t]");
  snf->add_option("--q", q, "Prime q")->required();
  snf->add_option("--matrix", matrix, "JSON rows of little-endian coefficient arrays, e.g. [[[0,1],[1]],[[1],[1]]]")
      ->required();

  auto* forms = app.add_subcommand("forms", "Unramified eigenforms on a degree-truncated set of classes");
  forms->require_subcommand(1);
  auto add_eigen_opts = [&](CLI::App* c) {
    c->add_option("--n", n, "Rank")->required();
    c->add_option("--q", q, "Field size")->required();
    c->add_option("--lambda", lambda, "Eigenvalues lambda_1..lambda_{n-1}, comma-separated rationals")
        ->required()
        ->delimiter(',');
    c->add_option("--depth", depth, "Spread bound D")->capture_default_str();
  };
  auto* f_eigen = forms->add_subcommand("eigen", "Nullity of the eigen-system and the normalized eigenform");
  add_eigen_opts(f_eigen);
  auto* f_tor = forms->add_subcommand("toroidal", "Toroidal sum and nullity with the toroidal constraint");
  add_eigen_opts(f_tor);
  auto* f_cusp = forms->add_subcommand("cusp", "Constant-term defects over rank (n1, n2) pairs");
  add_eigen_opts(f_cusp);
  f_cusp->add_option("--n1", n1, "Rank of F")->required();
  f_cusp->add_option("--n2", n2, "Rank of G")->required();

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms, Hall engine and brute force on a grid");
  verify->add_flag("--quick", quick, "Small grid (default)");
  verify->add_flag("--full", full_grid, "Full grid");
  verify->add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
  verify->add_option("--threads", threads, "Oracle worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_s{"heckelab"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_s) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << "usage error: " << e.what() << "\n";
    return usage;
  }

  const std::string command = [&] {
    std::string c;
    for (const CLI::App* a = &app; !a->get_subcommands().empty();) {
      a = a->get_subcommands().front();
      c += (c.empty() ? "" : " ") + a->get_name();
    }
    return c;
  }();

  try {
    Report rep;
    int status = ok;
    if (gr->parsed()) {
      rep = cmd_gr(k, n, q);
    } else if (delta->parsed()) {
      rep = cmd_delta(n, r);
    } else if (hall_mul->parsed()) {
      rep = cmd_hall_mul(word, torsion, d, q);
    } else if (hall_mult->parsed()) {
      rep = cmd_hall_mult(BundleType(from), BundleType(to), d, r, q);
    } else if (hk_nb->parsed()) {
      rep = cmd_hecke_neighbors(BundleType(bundle), d, r, q, !no_cross);
    } else if (hk_mult->parsed()) {
      rep = cmd_hecke_mult(BundleType(from), BundleType(to), d, r, q, !no_cross);
    } else if (census->parsed()) {
      if (*q < 2) throw DomainError("q must be >= 2");
      rep = cmd_oracle_census(BundleType(bundle), static_cast<unsigned>(*q), poly, d, r, threads);
    } else if (snf->parsed()) {
      if (*q < 2) throw DomainError("q must be >= 2");
      rep = cmd_oracle_snf(static_cast<unsigned>(*q), matrix);
    } else if (f_eigen->parsed()) {
      rep = cmd_forms_eigen(eigen_query(n, *q, lambda, depth));
    } else if (f_tor->parsed()) {
      rep = cmd_forms_toroidal(eigen_query(n, *q, lambda, depth));
    } else if (f_cusp->parsed()) {
      rep = cmd_forms_cusp(eigen_query(n, *q, lambda, depth), n1, n2);
    } else if (verify->parsed()) {
      if (quick && full_grid) throw DomainError("--quick and --full are exclusive");
      rep = cmd_verify(full_grid, seed, threads);
      if (!rep.body["ok"].get<bool>()) status = identity;
    }
    if (format == "json") {
      json doc = {{"schema_version", kSchemaVersion}, {"command", command}, {"result", rep.body}};
      out << doc.dump(2) << "\n";
    } else {
      out << rep.text;
    }
    return status;
  } catch (const IdentityViolation& e) {
    json diag = {{"schema_version", kSchemaVersion}, {"command", command},
                 {"error", {{"kind", "identity_violation"}, {"message", e.what()}}}};
    out << diag.dump(2) << "\n";
    return identity;
  } catch (const ArithmeticError& e) {
    json diag = {{"schema_version", kSchemaVersion}, {"command", command},
                 {"error", {{"kind", "arithmetic_error"}, {"message", e.what()}}}};
    out << diag.dump(2) << "\n";
    return identity;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return usage;
  } catch (const ResourceError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace heckelab::cli
