#pragma once

// Exact truncated power series in up to three variables x, t, u with
// rational coefficients.
//
// A series is graded either by x-degree (t and u are catalytic: each grade is
// a polynomial in them) or by total degree. All grades 0..order are known
// exactly; nothing above order is stored.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "permlab/errors.hpp"

namespace permlab {

using Rational = mpq_class;

enum class Var { x = 0, t = 1, u = 2 };
enum class Grading { x_degree, total_degree };

/// Exponents of (x, t, u).
using Exponent = std::array<int, 3>;

class MSeries {
 public:
  using Grade = std::map<Exponent, Rational>;

  MSeries(Grading grading, int order);

  static MSeries constant(const Rational& c, Grading grading, int order);
  static MSeries variable(Var v, Grading grading, int order);
  static MSeries monomial(const Rational& c, const Exponent& e, Grading grading, int order);
  /// Σ coeffs[n] x^n.
  static MSeries from_x_coefficients(const std::vector<Rational>& coeffs, Grading grading,
                                     int order);

  Grading grading() const noexcept { return grading_; }
  int order() const noexcept { return order_; }
  int grade_of(const Exponent& e) const noexcept;

  const Grade& grade(int d) const { return grades_.at(d); }
  Rational coeff(const Exponent& e) const;
  /// Adds c to the coefficient of e; terms above the order are dropped.
  void add_term(const Exponent& e, const Rational& c);

  bool is_zero() const noexcept;
  /// Lowest grade holding a nonzero term, or order + 1.
  int valuation() const noexcept;
  /// Lowest grade at which the two series differ, or min order + 1.
  int first_difference(const MSeries& other) const;
  /// First differing monomial up to min order, if any.
  bool first_mismatch(const MSeries& other, Exponent& where, Rational& lhs, Rational& rhs) const;

  /// Drops grades above `order` (which must not exceed the current order).
  MSeries truncated(int order) const;
  /// Declares the order to be `order`, padding unknown grades with zero.
  MSeries with_order(int order) const;

  /// Bitmask of variables with a nonzero exponent somewhere (bit i = Var i).
  unsigned variables() const noexcept;

  /// Coefficients of x^0..x^order; requires a series in x alone.
  std::vector<Rational> x_coefficients() const;

  /// Sets the variable v to 1; requires the x-degree grading and v != x.
  MSeries at_one(Var v) const;

  /// One "coeff * x^a t^b u^c" line per term, by grade then exponent.
  std::string to_text() const;

  MSeries& operator+=(const MSeries& b);
  MSeries& operator-=(const MSeries& b);
  MSeries& operator*=(const Rational& c);

  friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
  friend MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }
  friend MSeries operator*(const MSeries& a, const MSeries& b);
  friend MSeries operator*(MSeries a, const Rational& c) { return a *= c; }
  friend MSeries operator*(const Rational& c, MSeries a) { return a *= c; }
  friend MSeries operator-(MSeries a) { return a *= Rational(-1); }

  friend bool operator==(const MSeries& a, const MSeries& b);

 private:
  void check_compatible(const MSeries& b) const;
  void drop_zeros();

  Grading grading_;
  int order_;
  std::vector<Grade> grades_;
};

/// 1/a. The grade-0 part must be a nonzero constant.
MSeries reciprocal(const MSeries& a);
/// a/b = a * reciprocal(b).
MSeries operator/(const MSeries& a, const MSeries& b);
/// a^k for k >= 0.
MSeries power(const MSeries& a, int k);
/// √a by Newton iteration; the grade-0 part of a must be exactly 1.
MSeries sqrt1(const MSeries& a);

/// a/(1−v). a must vanish at v = 1 so the quotient has finite grades.
/// x-degree grading only, v ∈ {t, u}.
MSeries divide_by_one_minus(const MSeries& a, Var v);
/// a/x^k. Every term must carry x^k; the order drops by k.
MSeries divide_by_x(const MSeries& a, int k);

/// Replaces variables by series. Bound series share one grading, which the
/// result takes (the host's grading when nothing is bound). Every variable
/// that carries the host's grade must map to a series of positive valuation;
/// the result order is the largest one the truncations support.
MSeries substitute(const MSeries& host, const std::map<Var, MSeries>& bindings);

}  // namespace permlab
