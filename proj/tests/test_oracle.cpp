#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "heckelab/errors.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/oracle.hpp"
#include "oracles.hpp"

using namespace heckelab;

namespace {

BundleType B(std::vector<int> d) { return BundleType(std::move(d)); }
const std::vector<long> kP{1, 1, 1};  // t^2 + t + 1 over F_2

std::vector<long> poly_coeffs(unsigned q, int d) { return default_point_poly(q, d).to_vector(); }

PolyMatrix rebuild(const SmithForm& s, std::uint32_t p) {
  const std::size_t n = s.diag.size();
  PolyMatrix d(n, std::vector<FqPoly>(n, FqPoly(p)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = s.diag[i];
  return mat_mul(mat_mul(s.left, d), s.right);
}

void expect_smith(const PolyMatrix& m, const std::vector<FqPoly>& want) {
  const std::uint32_t p = m[0][0].modulus();
  const SmithForm s = smith_normal_form(m);
  ASSERT_EQ(s.diag, want);
  EXPECT_EQ(rebuild(s, p), m);
  EXPECT_EQ(determinant(s.left).degree(), 0);
  EXPECT_EQ(determinant(s.right).degree(), 0);
}

}  // namespace

TEST(FiniteField, Axioms) {
  for (auto [p, mod] : std::vector<std::pair<std::uint32_t, std::vector<long>>>{
           {2, {1, 1, 1}}, {3, {1, 0, 1}}, {2, {1, 1, 0, 1}}, {5, {2, 1}}, {3, {2, 2, 1}}}) {
    const FiniteField f(p, FqPoly(p, mod));
    ASSERT_EQ(f.size(), static_cast<std::uint32_t>(std::pow(p, mod.size() - 1) + 0.5));
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.reduce(f.lift(a)), a);
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      for (std::uint32_t b = 0; b < f.size(); ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (std::uint32_t c = 0; c < f.size(); c += 3)
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    EXPECT_THROW(f.inv(0), ArithmeticError);
    // P(t) vanishes at the residue class of t
    EXPECT_EQ(f.reduce(FqPoly(p, mod)), 0u);
  }
}

TEST(Subspaces, CountsMatchGrassmannian) {
  const FiniteField f4(2, FqPoly(2, kP));
  EXPECT_EQ(enumerate_subspaces(2, 1, f4).size(), 5u);
  const FiniteField f2(2, FqPoly(2, {0, 1}));
  EXPECT_EQ(enumerate_subspaces(3, 3, f2).size(), 1u);
  EXPECT_EQ(enumerate_subspaces(3, 1, f2).size(), 7u);
  for (const FiniteField* f : {&f2, &f4})
    for (int n = 1; n <= 4; ++n)
      for (int r = 0; r <= n; ++r) {
        const auto subs = enumerate_subspaces(n, r, *f);
        EXPECT_EQ(Integer(static_cast<unsigned long>(subs.size())),
                  oracle::grassmannian_count(static_cast<unsigned>(r), static_cast<unsigned>(n), Integer(f->size())));
        std::set<std::vector<std::vector<std::uint32_t>>> seen;
        for (const auto& w : subs) {
          EXPECT_EQ(w.dim(), n - r);
          for (int j = 0; j < w.dim(); ++j)
            EXPECT_EQ(w.rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(w.pivots[static_cast<std::size_t>(j)])], 1u);
          seen.insert(w.rows);
        }
        EXPECT_EQ(seen.size(), subs.size());
      }
  EXPECT_EQ(schubert_cells(4, 2).size(), 6u);
}

TEST(Subspaces, BudgetEnforced) {
  const FiniteField f4(2, FqPoly(2, kP));
  OracleBudget tiny;
  tiny.subspaces = 4;
  EXPECT_THROW(enumerate_subspaces(2, 1, f4, tiny), ResourceError);
  EXPECT_THROW(brute_multiplicity(B({0, 0}), ClosedPoint(2, kP), 1, tiny), ResourceError);
}

TEST(SplittingType, Examples) {
  const FiniteField f4(2, FqPoly(2, kP));
  // W = span (1, t)
  FiberSubspace w{2, {0}, {{1, f4.reduce(FqPoly(2, {0, 1}))}}};
  const BundleType t = splitting_type(B({0, 0}), w, f4);
  EXPECT_EQ(t.degree(), -2);
  EXPECT_TRUE(t == B({-1, -1}) || t == B({-2, 0}));

  const FiberSubspace full{2, {0, 1}, {{1, 0}, {0, 1}}};
  EXPECT_EQ(splitting_type(B({0, 3}), full, f4), B({0, 3}));

  const FiniteField f3(3, FqPoly(3, {0, 1}));
  for (const auto& w1 : enumerate_subspaces(1, 1, f3)) EXPECT_EQ(splitting_type(B({3}), w1, f3), B({2}));
}

TEST(BruteMultiplicity, WorkedExample) {
  const auto c = brute_multiplicity(B({0, 0}), ClosedPoint(2, kP), 1);
  EXPECT_EQ(c, (std::map<BundleType, Integer>{{B({-1, -1}), 2}, {B({-2, 0}), 3}}));
}

TEST(BruteMultiplicity, DegreeOnePoint) {
  const auto c = brute_multiplicity(B({0, 0}), ClosedPoint(2, std::vector<long>{0, 1}), 1);
  EXPECT_EQ(c, (std::map<BundleType, Integer>{{B({-1, 0}), 3}}));
}

TEST(BruteMultiplicity, FullWeight) {
  const auto c = brute_multiplicity(B({0, 1, 1}), ClosedPoint(3, poly_coeffs(3, 2)), 3);
  EXPECT_EQ(c, (std::map<BundleType, Integer>{{B({-2, -1, -1}), 1}}));
}

TEST(BruteMultiplicity, ThreadCountDoesNotMatter) {
  const ClosedPoint x(3, poly_coeffs(3, 2));
  const auto one = brute_multiplicity(B({0, 1, 2}), x, 1, {}, 1);
  const auto many = brute_multiplicity(B({0, 1, 2}), x, 1, {}, 4);
  EXPECT_EQ(one, many);
}

TEST(BruteMultiplicity, MatchesSectionCounting) {
  // independent census: count sections with residue in W directly
  for (unsigned q : {2u, 3u})
    for (int d = 1; d <= 2; ++d) {
      const auto poly = poly_coeffs(q, d);
      const oracle::SmallField sf(static_cast<int>(q), std::vector<int>(poly.begin(), poly.end()));
      for (int n = 1; n <= 3; ++n) {
        if (n == 3 && sf.size > 4) continue;
        for (const auto& e : oracle::bundle_grid(n, 0, 2))
          for (int r = 1; r <= n; ++r)
            EXPECT_EQ(brute_multiplicity(e, ClosedPoint(q, poly), r), oracle::section_census(e, sf, r))
                << e.to_string() << " q=" << q << " d=" << d << " r=" << r;
      }
    }
}

TEST(BruteMultiplicity, MatchesClosedForms) {
  for (unsigned q : {2u, 3u})
    for (int d = 1; d <= 2; ++d)
      for (int n = 1; n <= 3; ++n)
        for (const auto& e : oracle::bundle_grid(n, 0, 2))
          for (int r = 1; r <= n; ++r) {
            std::map<BundleType, Integer> closed;
            for (const auto& [ep, nb] : neighbors(e, d, r)) closed.emplace(ep, nb.multiplicity.eval(Integer(q)));
            EXPECT_EQ(brute_multiplicity(e, ClosedPoint(q, poly_coeffs(q, d)), r), closed);
          }
}

TEST(Smith, SimpleForms) {
  expect_smith(identity_matrix(2, 3), {FqPoly(2, {1}), FqPoly(2, {1}), FqPoly(2, {1})});
  expect_smith(make_matrix(2, {{kP, {0}}, {{0}, {1}}}), {FqPoly(2, {1}), FqPoly(2, kP)});
  EXPECT_THROW(smith_normal_form(make_matrix(2, {{{1}, {1}}, {{1}, {1}}})), DomainError);
  EXPECT_THROW(smith_normal_form(make_matrix(2, {{{1}, {1}}})), DomainError);
}

TEST(Smith, WorkedExampleMatrices) {
  // the five morphisms O(-1)^2 -> O^2 and O(-2)+O -> O^2, at S = 1
  const std::vector<std::vector<std::vector<std::vector<long>>>> phis{
      {{{0, 1}, {1, 1}}, {{1}, {0, 1}}},
      {{{1}, {1, 1}}, {{0, 1}, {1}}},
      {{kP, {0}}, {{0}, {1}}},
      {{kP, {1}}, {{0}, {1}}},
      {{kP, {0}}, {kP, {1}}},
  };
  for (const auto& phi : phis) {
    const PolyMatrix m = make_matrix(2, phi);
    EXPECT_EQ(determinant(m), FqPoly(2, kP));
    expect_smith(m, {FqPoly(2, {1}), FqPoly(2, kP)});
  }
}

TEST(Smith, ModificationLatticesHaveRCopies) {
  std::mt19937_64 rng(99);
  for (auto [q, d] : std::vector<std::pair<unsigned, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {2, 3}}) {
    const FqPoly P = default_point_poly(q, d);
    const FiniteField f(q, P);
    for (int n = 1; n <= 3; ++n)
      for (int r = 0; r <= n; ++r) {
        const auto subs = enumerate_subspaces(n, r, f);
        for (int it = 0; it < 5; ++it) {
          const auto& w = subs[std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng)];
          std::vector<FqPoly> want(static_cast<std::size_t>(n - r), FqPoly(q, {1}));
          want.insert(want.end(), static_cast<std::size_t>(r), P);
          expect_smith(modification_lattice(w, f), want);
        }
      }
  }
}

TEST(AutCounts, BruteMatchesFormula) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& e : oracle::bundle_grid(n, 0, 2))
      for (unsigned q : {2u, 3u}) {
        if (n == 3 && q == 3) continue;
        EXPECT_EQ(brute_aut_order(e, q), aut_order(e, Integer(q))) << e.to_string();
      }
  EXPECT_EQ(brute_aut_order(B({0, 1}), 2), 4);
  EXPECT_EQ(brute_aut_order(B({5}), 3), 2);
}

TEST(Monomorphisms, WorkedExample) {
  const ClosedPoint x(2, kP);
  EXPECT_EQ(count_monomorphisms(B({-1, -1}), B({0, 0}), x), 2 * aut_order(B({-1, -1}), Integer(2)));
  EXPECT_EQ(count_monomorphisms(B({-2, 0}), B({0, 0}), x), 3 * aut_order(B({-2, 0}), Integer(2)));
  EXPECT_EQ(count_monomorphisms(B({-2}), B({0}), x), 1);
}

TEST(Monomorphisms, OrbitCountIsMultiplicity) {
  for (unsigned q : {2u, 3u}) {
    const ClosedPoint x(q, poly_coeffs(q, 1));
    for (const auto& e : oracle::bundle_grid(2, 0, 2))
      for (const auto& [ep, nb] : neighbors(e, 1, 1))
        EXPECT_EQ(count_monomorphisms(ep, e, x), nb.multiplicity.eval(Integer(q)) * aut_order(ep, Integer(q)));
  }
}
