#include <gtest/gtest.h>

#include "permlab/series.hpp"

using namespace permlab;

namespace {

constexpr auto X = Grading::x_degree;
constexpr auto T = Grading::total_degree;

MSeries x(int n) { return MSeries::variable(Var::x, X, n); }
MSeries t(int n) { return MSeries::variable(Var::t, X, n); }
MSeries one(int n, Grading g = X) { return MSeries::constant(1, g, n); }

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long c : v) out.emplace_back(c);
  return out;
}

MSeries catalan(int n) {
  auto root = sqrt1(one(n + 1) - 4 * x(n + 1));
  return divide_by_x(one(n + 1) - root, 1) * Rational(1, 2);
}

}  // namespace

TEST(Arith, GeometricIdentity) {
  for (int n : {0, 1, 7, 20}) {
    MSeries geo(X, n);
    for (int k = 0; k <= n; ++k) geo.add_term({k, 0, 0}, 1);
    EXPECT_EQ((one(n) - x(n)) * geo, one(n));
  }
}

TEST(Arith, AdditiveIdentityAndOrders) {
  auto s = catalan(8);
  EXPECT_EQ(s + MSeries(X, 8), s);
  EXPECT_EQ((s + MSeries(X, 5)).order(), 5);
  EXPECT_EQ((s * one(3)).order(), 3);
  EXPECT_THROW(s + one(8, T), SeriesError);
}

TEST(Arith, CatalanSquare) {
  auto c = catalan(6);
  EXPECT_EQ((c * c).coeff({2, 0, 0}), 5);
  EXPECT_EQ(c.x_coefficients(), ints({1, 1, 2, 5, 14, 42, 132}));
}

TEST(Arith, CommutativeAndAssociative) {
  auto a = one(6) + x(6) * t(6) + 3 * x(6) * x(6);
  auto b = catalan(6) - t(6);
  auto c = reciprocal(one(6) - x(6) * t(6) * t(6));
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ((a + b) + c, a + (b + c));
}

TEST(Reciprocal, Examples) {
  const int n = 10;
  auto r = reciprocal(one(n) - t(n) * x(n));
  for (int k = 0; k <= n; ++k) EXPECT_EQ(r.coeff({k, k, 0}), 1);
  EXPECT_EQ(r.grade(3).size(), 1u);
  EXPECT_EQ(reciprocal(MSeries::constant(2, X, 4)), MSeries::constant(Rational(1, 2), X, 4));
  auto fib = reciprocal(one(n) - x(n) - x(n) * x(n));
  EXPECT_EQ(fib.x_coefficients(), ints({1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89}));
  EXPECT_THROW(reciprocal(x(4)), SeriesError);
  EXPECT_THROW(reciprocal(one(4) - t(4)), SeriesError);
}

TEST(Sqrt, Involution) {
  auto a = one(20) - 6 * x(20) + x(20) * x(20);
  auto r = sqrt1(a);
  EXPECT_EQ(r * r, a);
  EXPECT_EQ(sqrt1(one(5)), one(5));
  EXPECT_THROW(sqrt1(MSeries::constant(4, X, 3)), SeriesError);

  const int n = 16;
  auto X1 = MSeries::variable(Var::x, T, n);
  auto U = MSeries::variable(Var::u, T, n);
  auto q = X1 * X1 + X1 + one(n, T);
  auto radicand = one(n, T) + U * U * q * q - 2 * U * (X1 * X1 + 3 * X1 + one(n, T));
  auto root = sqrt1(radicand);
  EXPECT_EQ(root * root, radicand);
}

TEST(Substitute, CatalanAtShiftedArgument) {
  const int n = 8;
  auto cstar = substitute(catalan(n), {{Var::x, x(n) * reciprocal(one(n) - t(n) * x(n))}});
  EXPECT_EQ(cstar.coeff({2, 1, 0}), 1);
  EXPECT_EQ(cstar.coeff({2, 0, 0}), 2);
  EXPECT_EQ(cstar.grade(2).size(), 2u);
  EXPECT_EQ(cstar.order(), n);
}

TEST(Substitute, IdentityBindingsAndErrors) {
  auto s = catalan(6) * (one(6) + t(6));
  EXPECT_EQ(substitute(s, {}), s);
  EXPECT_EQ(substitute(s, {{Var::x, x(6)}, {Var::t, t(6)}}), s);
  EXPECT_THROW(substitute(s, {{Var::x, one(6) + x(6)}}), SeriesError);
  EXPECT_EQ(substitute(s, {{Var::t, one(6)}}), s.at_one(Var::t));
}

TEST(Substitute, TotalGradedHostIntoUnivariate) {
  // (x + u)^2 with u <- x, x <- 2x gives 9x^2
  const int n = 6;
  auto X1 = MSeries::variable(Var::x, T, n);
  auto U = MSeries::variable(Var::u, T, n);
  auto host = (X1 + U) * (X1 + U);
  auto r = substitute(host, {{Var::u, x(n)}, {Var::x, 2 * x(n)}});
  EXPECT_EQ(r.coeff({2, 0, 0}), 9);
  EXPECT_EQ(r.order(), n);
}

TEST(Divide, OneMinusAndPowersOfX) {
  const int n = 6;
  auto num = one(n) - t(n) * t(n) * t(n);  // (1 - t)(1 + t + t^2)
  EXPECT_EQ(divide_by_one_minus(num, Var::t), one(n) + t(n) + t(n) * t(n));
  EXPECT_THROW(divide_by_one_minus(one(n) + t(n), Var::t), SeriesError);
  EXPECT_EQ(divide_by_x(x(n) * x(n) + x(n), 1), (x(n) + one(n)).truncated(n - 1));
  EXPECT_THROW(divide_by_x(one(n) + x(n), 1), SeriesError);
}

TEST(Text, MonomialLines) {
  auto s = one(2) + Rational(3, 2) * x(2) * t(2);
  EXPECT_EQ(s.to_text(), "1 * x^0 t^0\n3/2 * x^1 t^1\n");
  EXPECT_EQ(catalan(2).to_text(), "1 * x^0\n1 * x^1\n2 * x^2\n");
}

TEST(Mismatch, ReportsFirstDifferingMonomial) {
  auto a = one(5) + x(5) * t(5);
  auto b = one(5) + 2 * x(5) * t(5);
  Exponent e;
  Rational l, r;
  ASSERT_TRUE(a.first_mismatch(b, e, l, r));
  EXPECT_EQ(e, (Exponent{1, 1, 0}));
  EXPECT_EQ(l, 1);
  EXPECT_EQ(r, 2);
  EXPECT_FALSE(a.first_mismatch(a, e, l, r));
}
