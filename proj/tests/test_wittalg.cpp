#include <gtest/gtest.h>

#include "wittmod/error.hpp"
#include "wittmod/exprio.hpp"
#include "wittmod/witt.hpp"

using namespace wittmod;

namespace {

WittTerm T(std::initializer_list<int> k, int dir) {
  std::vector<int> v(k);
  return WittTerm::derivation(v, dir);
}

AlgElement E(const std::string& s, Algebra algebra, int n) { return parse_element(s, algebra, n); }

// [t^r d_i, t^s d_j] evaluated straight from the defining formula.
AlgElement formula_bracket(const WittTerm& x, const WittTerm& y, Algebra algebra) {
  const int n = x.rank();
  std::vector<int> sum(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) sum[static_cast<std::size_t>(j - 1)] = x.exponent(j) + y.exponent(j);
  return AlgElement::from_terms(algebra, n,
                                {{WittTerm::derivation(sum, y.direction()), Scalar(y.exponent(x.direction()))},
                                 {WittTerm::derivation(sum, x.direction()), Scalar(-x.exponent(y.direction()))}});
}

}  // namespace

TEST(Bracket, Examples) {
  const AlgElement r = bracket_basis(T({1, 0}, 2), T({0, 1}, 1), Algebra::Witt, 2);
  EXPECT_EQ(r, E("t[1,1]d1 - t[1,1]d2", Algebra::Witt, 2));
  EXPECT_TRUE(bracket_basis(T({0, 0}, 1), T({0, 0}, 2), Algebra::Witt, 2).is_zero());
  const AlgElement vir = bracket_basis(WittTerm::d(-2), WittTerm::d(2), Algebra::Virasoro, 1);
  EXPECT_EQ(vir, E("4*d0 - 1/2*C", Algebra::Virasoro, 1));
}

TEST(Bracket, BilinearExamples) {
  const AlgElement x = E("d1 + d2", Algebra::Witt, 1);
  EXPECT_TRUE(bracket(x, x).is_zero());
  EXPECT_EQ(bracket(E("2*d1", Algebra::Witt, 1), E("3*d-1", Algebra::Witt, 1)), E("-12*d0", Algebra::Witt, 1));
  EXPECT_EQ(bracket(x, E("d-1", Algebra::Witt, 1)), E("-2*d0 - 3*d1", Algebra::Witt, 1));
}

TEST(Bracket, CentralIsCentral) {
  for (int m = -3; m <= 3; ++m) {
    EXPECT_TRUE(bracket_basis(WittTerm::central(), WittTerm::d(m), Algebra::Virasoro, 1).is_zero());
    EXPECT_TRUE(bracket_basis(WittTerm::d(m), WittTerm::central(), Algebra::Virasoro, 1).is_zero());
  }
}

TEST(Bracket, Errors) {
  try {
    bracket_basis(T({-1, -1}, 1), T({0, 0}, 1), Algebra::WittPlus, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InadmissibleTerm);
  }
  EXPECT_THROW(bracket_basis(T({0, 0}, 1), WittTerm::d(1), Algebra::Witt, 2), Error);
  EXPECT_THROW(bracket(E("d1", Algebra::Witt, 1), E("d1", Algebra::Virasoro, 1)), Error);
}

TEST(PlusDomain, Examples) {
  EXPECT_TRUE(in_plus_domain(T({-1, 0}, 1)));
  EXPECT_FALSE(in_plus_domain(T({-1, 0}, 2)));
  EXPECT_TRUE(in_plus_domain(T({0, 0, 0}, 3)));
  EXPECT_TRUE(in_plus_domain(T({0, 0, 0}, 1)));
  EXPECT_FALSE(in_plus_domain(T({2, -2}, 2)));
}

class AlgebraLaws : public ::testing::TestWithParam<std::pair<Algebra, int>> {};

TEST_P(AlgebraLaws, Antisymmetry) {
  const auto [algebra, n] = GetParam();
  const auto basis = basis_terms(algebra, n, 4);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      ASSERT_EQ(bracket_basis(x, y, algebra, n), -bracket_basis(y, x, algebra, n))
          << print_term(x) << " " << print_term(y);
    }
  }
}

TEST_P(AlgebraLaws, Jacobi) {
  const auto [algebra, n] = GetParam();
  const auto basis = basis_terms(algebra, n, 2);
  for (const auto& x : basis) {
    const AlgElement ex = AlgElement::basis(algebra, n, x);
    for (const auto& y : basis) {
      const AlgElement ey = AlgElement::basis(algebra, n, y);
      const AlgElement xy = bracket(ex, ey);
      for (const auto& z : basis) {
        const AlgElement ez = AlgElement::basis(algebra, n, z);
        const AlgElement sum = bracket(ex, bracket(ey, ez)) + bracket(ey, bracket(ez, ex)) + bracket(ez, xy);
        ASSERT_TRUE(sum.is_zero()) << print_term(x) << " " << print_term(y) << " " << print_term(z);
      }
    }
  }
}

TEST_P(AlgebraLaws, GradingAndFormula) {
  const auto [algebra, n] = GetParam();
  const auto basis = basis_terms(algebra, n, 3);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (x.is_central() || y.is_central()) continue;
      const AlgElement r = bracket_basis(x, y, algebra, n);
      for (const auto& [t, c] : r.terms()) {
        if (t.is_central()) continue;
        for (int j = 1; j <= n; ++j) ASSERT_EQ(t.exponent(j), x.exponent(j) + y.exponent(j));
      }
      if (algebra != Algebra::Virasoro) ASSERT_EQ(r, formula_bracket(x, y, algebra));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(All, AlgebraLaws,
                         ::testing::Values(std::pair{Algebra::Witt, 1}, std::pair{Algebra::Witt, 2},
                                           std::pair{Algebra::WittPlus, 1}, std::pair{Algebra::WittPlus, 2},
                                           std::pair{Algebra::Virasoro, 1}));

TEST(PlusClosure, BoundaryCoefficientVanishes) {
  // r = (-1,0) d1, s = (0,0) d2 : (r+s)_1 = -1 and the d2 coefficient s_1 = 0.
  const WittTerm x = T({-1, 0}, 1);
  const WittTerm y = T({0, 0}, 2);
  const AlgElement r = bracket_basis(x, y, Algebra::WittPlus, 2);
  EXPECT_TRUE(r.coeff(T({-1, 0}, 2)).is_zero());
  EXPECT_EQ(r, E("0", Algebra::WittPlus, 2));  // -r_2 = 0 too
  // (-1,1) d1 with (0,0) d2: d2 term vanishes, d1 term survives.
  const AlgElement r2 = bracket_basis(T({-1, 1}, 1), T({0, 0}, 2), Algebra::WittPlus, 2);
  EXPECT_EQ(r2, E("-t[-1,1]d1", Algebra::WittPlus, 2));
}

TEST(PlusClosure, EveryBracketStaysInDomain) {
  std::size_t boundary_hits = 0;
  for (int n : {1, 2, 3}) {
    const auto basis = basis_terms(Algebra::WittPlus, n, 2);
    for (const auto& x : basis) {
      for (const auto& y : basis) {
        // Bracket in the full Witt algebra, then check every surviving term.
        const AlgElement r = bracket_basis(x, y, Algebra::Witt, n);
        for (const auto& [t, c] : r.terms()) ASSERT_TRUE(in_plus_domain(t));
        for (int dir : {x.direction(), y.direction()}) {
          std::vector<int> sum;
          for (int j = 1; j <= n; ++j) sum.push_back(x.exponent(j) + y.exponent(j));
          const WittTerm cand = WittTerm::derivation(sum, dir);
          if (!in_plus_domain(cand)) {
            ++boundary_hits;
            ASSERT_TRUE(r.coeff(cand).is_zero());
          }
        }
      }
    }
  }
  EXPECT_GT(boundary_hits, 0u);
}
