#include "permlab/series.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace permlab {

namespace {

void accumulate_product(const MSeries::Grade& a, const MSeries::Grade& b, MSeries::Grade& out) {
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      const Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out[e] += ca * cb;
    }
}

void erase_zeros(MSeries::Grade& g) {
  for (auto it = g.begin(); it != g.end();) {
    if (sgn(it->second) == 0)
      it = g.erase(it);
    else
      ++it;
  }
}

const char* kVarNames[] = {"x", "t", "u"};

}  // namespace

MSeries::MSeries(Grading grading, int order) : grading_(grading), order_(order) {
  if (order < 0) throw SeriesError("negative series order");
  grades_.resize(static_cast<std::size_t>(order) + 1);
}

MSeries MSeries::constant(const Rational& c, Grading grading, int order) {
  return monomial(c, {0, 0, 0}, grading, order);
}

MSeries MSeries::variable(Var v, Grading grading, int order) {
  Exponent e{0, 0, 0};
  e[static_cast<int>(v)] = 1;
  return monomial(1, e, grading, order);
}

MSeries MSeries::monomial(const Rational& c, const Exponent& e, Grading grading, int order) {
  MSeries s(grading, order);
  s.add_term(e, c);
  return s;
}

MSeries MSeries::from_x_coefficients(const std::vector<Rational>& coeffs, Grading grading,
                                     int order) {
  MSeries s(grading, order);
  for (std::size_t n = 0; n < coeffs.size(); ++n) s.add_term({static_cast<int>(n), 0, 0}, coeffs[n]);
  return s;
}

int MSeries::grade_of(const Exponent& e) const noexcept {
  return grading_ == Grading::x_degree ? e[0] : e[0] + e[1] + e[2];
}

Rational MSeries::coeff(const Exponent& e) const {
  const int d = grade_of(e);
  if (d > order_) throw SeriesError("coefficient above the truncation order");
  auto it = grades_[d].find(e);
  return it == grades_[d].end() ? Rational(0) : it->second;
}

void MSeries::add_term(const Exponent& e, const Rational& c) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw SeriesError("negative exponent");
  const int d = grade_of(e);
  if (d > order_ || sgn(c) == 0) return;
  auto& slot = grades_[d][e];
  slot += c;
  if (sgn(slot) == 0) grades_[d].erase(e);
}

bool MSeries::is_zero() const noexcept { return valuation() > order_; }

int MSeries::valuation() const noexcept {
  for (int d = 0; d <= order_; ++d)
    if (!grades_[d].empty()) return d;
  return order_ + 1;
}

int MSeries::first_difference(const MSeries& other) const {
  const int n = std::min(order_, other.order_);
  for (int d = 0; d <= n; ++d)
    if (grades_[d] != other.grades_[d]) return d;
  return n + 1;
}

bool MSeries::first_mismatch(const MSeries& other, Exponent& where, Rational& lhs,
                             Rational& rhs) const {
  const int d = first_difference(other);
  if (d > std::min(order_, other.order_)) return false;
  const Grade& a = grades_[d];
  const Grade& b = other.grades_[d];
  auto ia = a.begin();
  auto ib = b.begin();
  while (true) {
    // merge walk over both sorted maps
    const bool a_done = ia == a.end();
    const bool b_done = ib == b.end();
    if (a_done && b_done) return false;
    if (!a_done && (b_done || ia->first < ib->first)) {
      where = ia->first, lhs = ia->second, rhs = 0;
      return true;
    }
    if (!b_done && (a_done || ib->first < ia->first)) {
      where = ib->first, lhs = 0, rhs = ib->second;
      return true;
    }
    if (ia->second != ib->second) {
      where = ia->first, lhs = ia->second, rhs = ib->second;
      return true;
    }
    ++ia, ++ib;
  }
}

MSeries MSeries::truncated(int order) const {
  if (order > order_) throw SeriesError("cannot truncate above the known order");
  MSeries s(grading_, order);
  for (int d = 0; d <= order; ++d) s.grades_[d] = grades_[d];
  return s;
}

MSeries MSeries::with_order(int order) const {
  MSeries s(grading_, order);
  for (int d = 0; d <= std::min(order, order_); ++d) s.grades_[d] = grades_[d];
  return s;
}

unsigned MSeries::variables() const noexcept {
  unsigned mask = 0;
  for (const auto& g : grades_)
    for (const auto& [e, c] : g)
      for (int i = 0; i < 3; ++i)
        if (e[i]) mask |= 1u << i;
  return mask;
}

std::vector<Rational> MSeries::x_coefficients() const {
  if (variables() & ~1u) throw SeriesError("series is not univariate in x");
  std::vector<Rational> out;
  for (int d = 0; d <= order_; ++d) {
    Rational c = 0;
    for (const auto& [e, v] : grades_[d]) c += v;
    out.push_back(c);
  }
  return out;
}

MSeries MSeries::at_one(Var v) const {
  if (grading_ != Grading::x_degree || v == Var::x)
    throw SeriesError("evaluation at 1 needs a catalytic variable of an x-graded series");
  MSeries s(grading_, order_);
  const int i = static_cast<int>(v);
  for (int d = 0; d <= order_; ++d)
    for (const auto& [key, c] : grades_[d]) {
      Exponent e = key;
      e[i] = 0;
      s.grades_[d][e] += c;
    }
  for (auto& g : s.grades_) erase_zeros(g);
  return s;
}

std::string MSeries::to_text() const {
  const unsigned mask = variables() | 1u;
  std::ostringstream out;
  for (int d = 0; d <= order_; ++d)
    for (const auto& [e, c] : grades_[d]) {
      out << c.get_str() << " *";
      for (int i = 0; i < 3; ++i)
        if (mask & (1u << i)) out << ' ' << kVarNames[i] << '^' << e[i];
      out << '\n';
    }
  return out.str();
}

void MSeries::check_compatible(const MSeries& b) const {
  if (grading_ != b.grading_) throw SeriesError("grading mismatch");
}

void MSeries::drop_zeros() {
  for (auto& g : grades_) erase_zeros(g);
}

MSeries& MSeries::operator+=(const MSeries& b) {
  check_compatible(b);
  if (b.order_ < order_) *this = truncated(b.order_);
  for (int d = 0; d <= order_; ++d) {
    auto& g = grades_[d];
    for (const auto& [e, c] : b.grades_[d]) g[e] += c;
    erase_zeros(g);
  }
  return *this;
}

MSeries& MSeries::operator-=(const MSeries& b) {
  check_compatible(b);
  if (b.order_ < order_) *this = truncated(b.order_);
  for (int d = 0; d <= order_; ++d) {
    auto& g = grades_[d];
    for (const auto& [e, c] : b.grades_[d]) g[e] -= c;
    erase_zeros(g);
  }
  return *this;
}

MSeries& MSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    for (auto& g : grades_) g.clear();
    return *this;
  }
  for (auto& g : grades_)
    for (auto& [e, v] : g) v *= c;
  return *this;
}

MSeries operator*(const MSeries& a, const MSeries& b) {
  a.check_compatible(b);
  const int n = std::min(a.order_, b.order_);
  MSeries out(a.grading_, n);
  for (int i = 0; i <= n; ++i) {
    if (a.grades_[i].empty()) continue;
    for (int j = 0; i + j <= n; ++j)
      if (!b.grades_[j].empty()) accumulate_product(a.grades_[i], b.grades_[j], out.grades_[i + j]);
  }
  out.drop_zeros();
  return out;
}

bool operator==(const MSeries& a, const MSeries& b) {
  return a.grading_ == b.grading_ && a.order_ == b.order_ && a.grades_ == b.grades_;
}

MSeries reciprocal(const MSeries& a) {
  const int n = a.order();
  const auto& g0 = a.grade(0);
  if (g0.size() != 1 || g0.begin()->first != Exponent{0, 0, 0})
    throw SeriesError("not invertible: constant term must be a nonzero rational");
  const Rational inv = Rational(1) / g0.begin()->second;
  MSeries r(a.grading(), n);
  r.add_term({0, 0, 0}, inv);
  for (int d = 1; d <= n; ++d) {
    MSeries::Grade acc;
    for (int k = 1; k <= d; ++k)
      if (!a.grade(k).empty() && !r.grade(d - k).empty())
        accumulate_product(a.grade(k), r.grade(d - k), acc);
    for (const auto& [e, c] : acc) r.add_term(e, -inv * c);
  }
  return r;
}

MSeries operator/(const MSeries& a, const MSeries& b) { return a * reciprocal(b); }

MSeries power(const MSeries& a, int k) {
  if (k < 0) throw SeriesError("negative power");
  MSeries result = MSeries::constant(1, a.grading(), a.order());
  MSeries base = a;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

MSeries sqrt1(const MSeries& a) {
  const auto& g0 = a.grade(0);
  if (g0.size() != 1 || g0.begin()->first != Exponent{0, 0, 0} || g0.begin()->second != 1)
    throw SeriesError("sqrt1 needs constant term 1");
  const int n = a.order();
  MSeries r = MSeries::constant(1, a.grading(), 0);
  int known = 0;
  const Rational half(1, 2);
  while (known < n) {
    known = std::min(n, 2 * known + 1);
    MSeries next = r.with_order(known);
    r = (next + a.truncated(known) * reciprocal(next)) * half;
  }
  return r.with_order(n);
}

MSeries divide_by_one_minus(const MSeries& a, Var v) {
  if (a.grading() != Grading::x_degree || v == Var::x)
    throw SeriesError("division by (1 - v) needs a catalytic variable of an x-graded series");
  const int vi = static_cast<int>(v);
  MSeries out(a.grading(), a.order());
  for (int d = 0; d <= a.order(); ++d) {
    // group by the other two exponents; each group is a polynomial in v
    std::map<Exponent, std::map<int, Rational>> groups;
    for (const auto& [key, c] : a.grade(d)) {
      Exponent e = key;
      const int k = e[vi];
      e[vi] = 0;
      groups[e][k] = c;
    }
    for (const auto& [base, poly] : groups) {
      Rational partial = 0;
      const int top = poly.rbegin()->first;
      for (int k = 0; k <= top; ++k) {
        auto it = poly.find(k);
        if (it != poly.end()) partial += it->second;
        if (k < top) {
          Exponent e = base;
          e[vi] = k;
          out.add_term(e, partial);
        }
      }
      if (sgn(partial) != 0) throw SeriesError("division by (1 - v) is not exact");
    }
  }
  return out;
}

MSeries divide_by_x(const MSeries& a, int k) {
  if (k < 0 || k > a.order()) throw SeriesError("invalid division by a power of x");
  MSeries out(a.grading(), a.order() - k);
  for (int d = 0; d <= a.order(); ++d)
    for (const auto& [key, c] : a.grade(d)) {
      Exponent e = key;
      if (e[0] < k) throw SeriesError("division by x^k is not exact");
      e[0] -= k;
      out.add_term(e, c);
    }
  return out;
}

MSeries substitute(const MSeries& host, const std::map<Var, MSeries>& bindings) {
  Grading g = host.grading();
  int order = INT_MAX;
  bool first = true;
  for (const auto& [v, s] : bindings) {
    if (first) g = s.grading();
    if (s.grading() != g) throw SeriesError("bindings use different gradings");
    order = std::min(order, s.order());
    first = false;
  }
  if (bindings.empty()) return host;

  std::vector<MSeries> image;
  for (int i = 0; i < 3; ++i) {
    auto it = bindings.find(static_cast<Var>(i));
    image.push_back(it != bindings.end() ? it->second
                                         : MSeries::variable(static_cast<Var>(i), g, order));
  }
  // Host grades above its order are unknown; each must land above the result
  // order. Only variables the host actually uses are constrained.
  const unsigned used = host.variables() | 1u;
  int grade_valuation = INT_MAX;
  for (int i = 0; i < 3; ++i) {
    const bool carries_grade = host.grading() == Grading::total_degree || i == 0;
    if (!carries_grade || !(used & (1u << i)) || image[i].is_zero()) continue;
    const int val = image[i].valuation();
    if (val == 0)
      throw SeriesError(std::string("substitution for ") + kVarNames[i] +
                        " must have positive valuation");
    grade_valuation = std::min(grade_valuation, val);
  }
  if (grade_valuation != INT_MAX) {
    const long long bound = static_cast<long long>(host.order() + 1) * grade_valuation - 1;
    if (bound < order) order = static_cast<int>(bound);
  }
  for (auto& s : image) s = s.truncated(std::min(order, s.order()));

  std::vector<std::vector<MSeries>> powers(3);
  auto power_of = [&](int i, int k) -> const MSeries& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(MSeries::constant(1, g, order));
    while (static_cast<int>(p.size()) <= k) p.push_back(p.back() * image[i]);
    return p[k];
  };

  MSeries out(g, order);
  for (int d = 0; d <= host.order(); ++d)
    for (const auto& [e, c] : host.grade(d)) {
      MSeries term = power_of(0, e[0]) * power_of(1, e[1]) * power_of(2, e[2]);
      out += term * c;
    }
  return out.with_order(order);
}

}  // namespace permlab
