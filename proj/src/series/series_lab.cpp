#include "permlab/series_lab.hpp"

#include <json.hpp>

#include "permlab/counts.hpp"
#include "permlab/decomposition.hpp"

namespace permlab {

namespace {

constexpr auto XG = Grading::x_degree;
constexpr auto TG = Grading::total_degree;

MSeries one(int n, Grading g = XG) { return MSeries::constant(1, g, n); }
MSeries var(Var v, int n, Grading g = XG) { return MSeries::variable(v, g, n); }
MSeries geometric(const MSeries& a) { return reciprocal(one(a.order(), a.grading()) - a); }

constexpr std::pair<std::string_view, Mutation> kMutations[] = {
    {"none", Mutation::none},
    {"a3-third-term-t", Mutation::a3_third_term_t},
    {"eq2-drop-correction", Mutation::eq2_drop_correction},
    {"cubic-coefficient", Mutation::cubic_coefficient},
    {"little-schroder-denominator", Mutation::little_schroder_denominator},
    {"y-numerator", Mutation::y_numerator},
    {"z-numerator", Mutation::z_numerator},
    {"h-term", Mutation::h_term},
    {"c3-bond-term", Mutation::c3_bond_term},
    {"s-printed-branch", Mutation::s_printed_branch},
    {"f-plus-overlap", Mutation::f_plus_overlap},
    {"f-minus", Mutation::f_minus},
    {"s-exponent", Mutation::s_exponent},
    {"catalan-substitution-sign", Mutation::catalan_substitution_sign},
};

// Refined table -> polynomial. Statistic values map to the listed variables.
MSeries table_series(const RefinedCountTable& table, const std::vector<Var>& vars, int n) {
  MSeries s(XG, n);
  for (const auto& [key, count] : table.counts) {
    if (key.first > n) continue;
    Exponent e{key.first, 0, 0};
    for (std::size_t i = 0; i < vars.size(); ++i) e[static_cast<int>(vars[i])] += key.second[i];
    s.add_term(e, Rational(static_cast<unsigned long>(count)));
  }
  return s;
}

void require_order(const MSeries& s, int order, std::string_view what) {
  if (s.order() < order)
    throw SeriesError(std::string(what) + " computed only to order " + std::to_string(s.order()));
}

}  // namespace

const std::vector<Mutation>& all_mutations() {
  static const std::vector<Mutation> all = [] {
    std::vector<Mutation> v;
    for (auto [name, m] : kMutations)
      if (m != Mutation::none) v.push_back(m);
    return v;
  }();
  return all;
}

std::string_view mutation_id(Mutation m) {
  for (auto [name, value] : kMutations)
    if (value == m) return name;
  return "?";
}

Mutation parse_mutation(std::string_view id) {
  for (auto [name, m] : kMutations)
    if (name == id) return m;
  throw ConfigError("unknown mutation '" + std::string(id) + "'");
}

std::string IdentityCheck::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["order"] = order;
  j["status"] = pass ? "pass" : "fail";
  if (mismatch) {
    j["firstMismatch"] = {
        {"exponent", {{"x", mismatch->at[0]}, {"t", mismatch->at[1]}, {"u", mismatch->at[2]}}},
        {"lhs", mismatch->lhs.get_str()},
        {"rhs", mismatch->rhs.get_str()}};
  } else {
    j["firstMismatch"] = nullptr;
  }
  return j.dump();
}

std::vector<MSeries> fixed_point_solve(const FixedPointMap& map, std::vector<MSeries> y,
                                       int order, std::string_view name) {
  auto diverge = [&](int grade) {
    return SeriesError("fixed point '" + std::string(name) +
                       "' does not contract: iterates disagree at grade " + std::to_string(grade));
  };
  for (auto& s : y) s = s.with_order(0);
  for (int d = 0; d < order; ++d) {
    std::vector<MSeries> in;
    for (const auto& s : y) in.push_back(s.with_order(d + 1));
    std::vector<MSeries> out = map(in);
    // grade d+1 of the input is still unknown, so it must not reach grade d+1
    // of the output
    std::vector<MSeries> nudged = in;
    for (auto& s : nudged) s.add_term({d + 1, 0, 0}, 1);
    const std::vector<MSeries> probe = map(nudged);
    for (std::size_t i = 0; i < out.size(); ++i) {
      require_order(out[i], d + 1, name);
      out[i] = out[i].truncated(d + 1);
      const int agree = out[i].first_difference(y[i]);
      if (agree <= d) throw diverge(agree);
      const int stable = out[i].first_difference(probe[i].truncated(d + 1));
      if (stable <= d + 1) throw diverge(stable);
    }
    y = std::move(out);
  }
  std::vector<MSeries> in;
  for (const auto& s : y) in.push_back(s.with_order(order));
  std::vector<MSeries> last = map(in);
  for (std::size_t i = 0; i < last.size(); ++i) {
    require_order(last[i], order, name);
    last[i] = last[i].truncated(order);
    if (last[i] != in[i]) throw diverge(last[i].first_difference(in[i]));
  }
  return last;
}

SeriesLab::SeriesLab(std::shared_ptr<ClassStore> store, Mutation mutation)
    : store_(std::move(store)), mutation_(mutation) {}

const std::vector<std::string>& SeriesLab::series_names() {
  static const std::vector<std::string> names{
      "catalan", "large-schroder", "little-schroder", "C-star", "Y", "Z", "D2", "D3",
      "B-cubic-root", "t-kernel", "h", "g", "C3", "s-substituted", "s-closed", "f", "f-plus",
      "f-minus", "A1-enum", "A2-enum", "A3-enum"};
  return names;
}

const std::vector<std::string>& SeriesLab::fixed_point_ids() {
  static const std::vector<std::string> ids{"catalan", "schroder-quadratic", "B-cubic-root",
                                            "t-kernel", "A1-eq2",  "A2-eq5",
                                            "A3-eq",   "Y-eq-3.3", "hg", "f"};
  return ids;
}

const std::vector<IdentityInfo>& SeriesLab::identities() {
  static const std::vector<IdentityInfo> ids{
      {"A1-eq2", true, 10, "enumerated A1 satisfies the C(254613) functional equation"},
      {"cubic-B", false, 20, "B^2 + (x-3)B + 2 = 0 for the large Schroder series"},
      {"kernel-xt", false, 20, "x t(x) B = B - 1 with t the little Schroder series"},
      {"kernel3-zero", false, 20, "the A1 kernel vanishes at t = t(x)"},
      {"A2-eq5", true, 10, "enumerated A2 satisfies the C(524361) functional equation"},
      {"Y-closed", true, 10, "enumerated Y equals its closed form"},
      {"Z-closed", true, 10, "enumerated Z equals its closed form"},
      {"Z-from-Y", true, 10, "Z = (1 - tx) Y - 1 on enumerated series"},
      {"eq12-zero", false, 20, "t^2 x + (t-1) x C* - (t-1) = 0 at t = (B-1)/(xB)"},
      {"eq13", false, 20, "B (1 - t x) = 1 with t the little Schroder series"},
      {"t-closed", false, 20, "the little Schroder closed form solves the C* kernel"},
      {"A3-eq", true, 10, "enumerated A3 satisfies the C(546132) equation (t-free third term)"},
      {"Y-eq-3.3", false, 20, "the C(4132) functional equation is solved by the closed Y"},
      {"hg-system", true, 10, "enumerated h, g satisfy their functional equations"},
      {"C3-from-hg", true, 10, "C(t,u,x) from the h, g solution matches enumeration"},
      {"s-two-ways", false, 20, "monomial summation over C equals the closed form of s"},
      {"s-vs-simples", true, 10, "closed s counts simples of C(263514) by position classes"},
      {"f-plus", true, 10, "sum-decomposables of C(263514) number 2xf - x^2(f+1)"},
      {"f-minus", true, 10, "skew-decomposables of C(263514) number f^2/(1+f)"},
      {"f-schroder", false, 20, "1 + f is the large Schroder series"},
      {"Y1-A033321", false, 20, "Y(1,x) = 2/(1 + x + sqrt((1-x)(1-5x)))"},
      {"A1-solve-schroder", false, 20, "solving the A1 equation gives B = large Schroder"},
      {"A2-solve-schroder", false, 20, "solving the A2 equation gives B = large Schroder"},
      {"t-kernel-little", false, 20, "the A1 kernel root is the little Schroder series"},
  };
  return ids;
}

MSeries SeriesLab::cached(const std::string& key, int order,
                          const std::function<MSeries()>& build) {
  auto it = cache_.find({key, order});
  if (it != cache_.end()) return it->second;
  MSeries s = build();
  cache_.emplace(std::make_pair(key, order), s);
  return s;
}

// ---------------------------------------------------------------------------
// closed forms

MSeries SeriesLab::catalan(int n) {
  return cached("catalan", n, [&] {
    const MSeries x = var(Var::x, n + 1);
    return divide_by_x(one(n + 1) - sqrt1(one(n + 1) - 4 * x), 1) * Rational(1, 2);
  });
}

MSeries SeriesLab::large_schroder(int n) {
  return cached("large-schroder", n, [&] {
    const MSeries x = var(Var::x, n);
    return (3 * one(n) - x - sqrt1(one(n) - 6 * x + x * x)) * Rational(1, 2);
  });
}

MSeries SeriesLab::little_schroder(int n) {
  return cached("little-schroder", n, [&] {
    const MSeries x = var(Var::x, n + 1);
    const Rational denom = mutation_ == Mutation::little_schroder_denominator ? 2 : 4;
    return divide_by_x(one(n + 1) + x - sqrt1(one(n + 1) - 6 * x + x * x), 1) * (1 / denom);
  });
}

MSeries SeriesLab::c_star(int n) {
  return cached("C-star", n, [&] {
    const MSeries x = var(Var::x, n);
    const MSeries t = var(Var::t, n);
    const MSeries arg = mutation_ == Mutation::catalan_substitution_sign
                            ? x * reciprocal(one(n) + t * x)
                            : x * geometric(t * x);
    return substitute(catalan(n), {{Var::x, arg}});
  });
}

MSeries SeriesLab::y_closed(int n) {
  return cached("Y", n, [&] {
    const MSeries x = var(Var::x, n);
    const MSeries t = var(Var::t, n);
    const MSeries cs = c_star(n);
    MSeries num = one(n) - t * x + (t * x - x) * cs;
    if (mutation_ == Mutation::y_numerator) num = one(n) + (t * x - x) * cs;
    return num * reciprocal((one(n) - x * cs) * (one(n) - t * x));
  });
}

MSeries SeriesLab::z_closed(int n) {
  return cached("Z", n, [&] {
    const MSeries x = var(Var::x, n);
    const MSeries t = var(Var::t, n);
    const MSeries cs = c_star(n);
    const MSeries num = mutation_ == Mutation::z_numerator ? t * x * cs : t * x * (cs - one(n));
    return num * reciprocal(one(n) - x * cs);
  });
}

// ---------------------------------------------------------------------------
// enumeration-backed series

MSeries SeriesLab::enum_series(std::string_view which, int n) {
  if (n > kMaxEnumerationOrder)
    throw PreconditionError("enumeration-backed series are limited to order " +
                            std::to_string(kMaxEnumerationOrder));
  return cached(std::string("enum:") + std::string(which), n, [&] {
    auto tab = [&](const PatternBasis& basis, std::vector<Statistic> stats,
                   std::vector<Var> vars, std::function<bool(PermView)> keep) {
      const auto levels = store_->levels(basis, n);
      return table_series(tabulate(basis, *levels, std::move(stats), keep), vars, n);
    };
    auto all = [](PermView) { return true; };
    const std::vector<Statistic> lm{Statistic::leading_maxima};
    const std::vector<Statistic> bl{Statistic::bond, Statistic::lr_min};
    const std::vector<Var> t{Var::t};
    const std::vector<Var> tu{Var::t, Var::u};
    const PatternBasis av132({"132"});
    const PatternBasis c263514 = egge_basis("263514");
    if (which == "A1") return tab(egge_basis("254613"), lm, t, all);
    if (which == "A2") return tab(egge_basis("524361"), lm, t, all);
    if (which == "A3") return tab(egge_basis("546132"), lm, t, all);
    if (which == "Y") return tab(egge_basis("4132"), lm, t, all);
    if (which == "Z")
      return tab(egge_basis("4132"), lm, t,
                 [](PermView p) { return passes(Filter::first_entry_not_one, p); });
    if (which == "h")
      return tab(av132, bl, tu, [](PermView p) { return passes(Filter::last_entry_not_length, p); });
    if (which == "g")
      return tab(av132, bl, tu, [](PermView p) { return passes(Filter::first_entry_not_max, p); });
    if (which == "C3")
      return tab(av132, bl, tu, [](PermView p) {
        return p.size() >= 2 && passes(Filter::last_entry_equals_length, p);
      });
    if (which == "f") return tab(c263514, {}, {}, [](PermView p) { return !p.empty(); });
    if (which == "f-plus") return tab(c263514, {}, {}, is_sum_decomposable);
    if (which == "f-minus") return tab(c263514, {}, {}, is_skew_decomposable);
    throw ConfigError("unknown enumeration series '" + std::string(which) + "'");
  });
}

// ---------------------------------------------------------------------------
// functional equations

MSeries SeriesLab::extraction_d(const MSeries& a, int n) {
  const MSeries t = var(Var::t, n);
  const MSeries x = var(Var::x, n);
  return divide_by_one_minus(a.at_one(Var::t) - t * a, Var::t) - c_star(n) * geometric(t * x);
}

MSeries SeriesLab::eq2_rhs(const MSeries& a1, int n) {
  const MSeries t = var(Var::t, n);
  const MSeries x = var(Var::x, n);
  const MSeries b = a1.at_one(Var::t);
  const MSeries g_tx = geometric(t * x);
  MSeries e = divide_by_one_minus(b - t * a1, Var::t);
  if (mutation_ != Mutation::eq2_drop_correction) e -= g_tx;
  const MSeries g_x = geometric(x);
  const MSeries bm1 = b - one(n);
  const MSeries gap = x * bm1 * g_x * g_tx;
  const MSeries blocks = reciprocal(one(n) - t * x * bm1 * g_tx);
  return g_tx + t * x * e * g_x + (a1 - g_tx) * gap * blocks;
}

MSeries SeriesLab::eq5_rhs(const MSeries& a, int n, bool third_term_t) {
  const MSeries t = var(Var::t, n);
  const MSeries x = var(Var::x, n);
  const MSeries d = extraction_d(a, n);
  const MSeries g_x = geometric(x);
  MSeries third = x * d * g_x * z_closed(n);
  if (third_term_t) third = t * third;
  return y_closed(n) + t * x * d * g_x + third;
}

MSeries SeriesLab::y33_rhs(const MSeries& y, int n) {
  const MSeries t = var(Var::t, n);
  const MSeries x = var(Var::x, n);
  const MSeries g_tx = geometric(t * x);
  const MSeries g_x = geometric(x);
  const MSeries cm1 = c_star(n) - one(n);
  return g_tx + t * x * cm1 * g_tx * g_x + x * g_x * (y - g_tx) * cm1;
}

std::vector<MSeries> SeriesLab::hg_rhs(const MSeries& h, const MSeries& g, int n) {
  const MSeries t = var(Var::t, n);
  const MSeries u = var(Var::u, n);
  const MSeries x = var(Var::x, n);
  const MSeries g_tx = geometric(t * x);
  const MSeries g_tux = geometric(t * u * x);
  const MSeries f = (h - one(n)) * t * x * g_tx + h + t * u * x * g_tx - one(n);
  const MSeries ug = u * x * g_tux * g;
  const MSeries second_factor =
      mutation_ == Mutation::h_term ? u * x * g_tux * g : t * u * x * g_tux * g;
  MSeries h_new = one(n) + x * f * (ug + g - one(n)) + u * x * (second_factor + g - one(n));
  MSeries g_new = one(n) + x * f * (ug + g);
  return {h_new, g_new};
}

MSeries SeriesLab::c3_from(const MSeries& h, int n) {
  const MSeries t = var(Var::t, n);
  const MSeries u = var(Var::u, n);
  const MSeries x = var(Var::x, n);
  const MSeries g_tx = geometric(t * x);
  const MSeries tail = mutation_ == Mutation::c3_bond_term ? u * x * x : u * t * x * x;
  return x * (h - one(n)) * g_tx + tail * g_tx;
}

MSeries SeriesLab::s_closed(int n) {
  return cached("s-closed", n, [&] {
    const MSeries x = var(Var::x, n, TG);
    const MSeries u = var(Var::u, n, TG);
    const MSeries q = x * x + x + one(n, TG);
    const MSeries radicand =
        one(n, TG) + u * u * q * q - 2 * u * (x * x + 3 * x + one(n, TG));
    const MSeries root = sqrt1(radicand);
    MSeries num = -1 * one(n, TG) + u + 3 * u * x + u * x * x;
    num = mutation_ == Mutation::s_printed_branch ? num - root : num + root;
    const MSeries den = 2 * (u + one(n, TG)) * (x + one(n, TG));
    return -1 * x * num * reciprocal(den);
  });
}

// s(u,x) = Σ c[b][m][k] x^(m+1) u^(k+b-m) (1+u)^(k-b-1) over the coefficients
// c[b][m][k] of t^b u^m x^k in C(t,u,x). A term has total degree at least
// k+1, so C is needed through x^(n-1).
MSeries SeriesLab::s_substituted(int n) {
  return cached("s-substituted", n, [&] {
    MSeries s(TG, n);
    if (n == 0) return s;
    const MSeries c = named("C3", n - 1);
    const MSeries x = var(Var::x, n, TG);
    const MSeries u = var(Var::u, n, TG);
    const MSeries one_plus_u = one(n, TG) + u;
    for (int k = 0; k <= n - 1; ++k)
      for (const auto& [e, coef] : c.grade(k)) {
        const int b = e[1];
        const int m = e[2];
        const int u_exp = k + b - m;
        int binom_exp = k - b - 1;
        if (u_exp < 0 || binom_exp < 0)
          throw SeriesError("negative exponent in the monomial form of s at x^" +
                            std::to_string(k) + " t^" + std::to_string(b) + " u^" +
                            std::to_string(m));
        if (mutation_ == Mutation::s_exponent) ++binom_exp;
        s += coef * MSeries::monomial(1, {m + 1, 0, u_exp}, TG, n) * power(one_plus_u, binom_exp);
      }
    (void)x;
    return s;
  });
}

MSeries SeriesLab::s_simples(int n) {
  if (n > kMaxEnumerationOrder)
    throw PreconditionError("enumeration-backed series are limited to order " +
                            std::to_string(kMaxEnumerationOrder));
  return cached("s-simples", n, [&] {
    MSeries s(TG, n);
    const auto levels = store_->levels(egge_basis("263514"), n);
    for (int len = 4; len <= n; ++len) {
      const ClassLevel& level = (*levels)[len];
      for (std::size_t i = 0; i < level.size(); ++i) {
        PermView p = level[i];
        if (!is_simple(p)) continue;
        const int lm = lr_minima_count(strip_leading_maxima(p));
        s.add_term({lm + 1, 0, len - lm - 1}, 1);
      }
    }
    return s;
  });
}

MSeries SeriesLab::f_plus_of(const MSeries& f) {
  const int n = f.order();
  const MSeries x = var(Var::x, n);
  if (mutation_ == Mutation::f_plus_overlap) return 2 * x * f - x * x * f;
  return 2 * x * f - x * x * (f + one(n));
}

MSeries SeriesLab::f_minus_of(const MSeries& f) {
  if (mutation_ == Mutation::f_minus) return f * f;
  return f * f * reciprocal(f + one(f.order()));
}

MSeries SeriesLab::f_rhs(const MSeries& f, const MSeries& s, int n) {
  const MSeries x = var(Var::x, n);
  const MSeries simples = substitute(s, {{Var::u, x * geometric(x)}, {Var::x, f}});
  return x + f_minus_of(f) + f_plus_of(f) + simples;
}

// ---------------------------------------------------------------------------

std::vector<MSeries> SeriesLab::fixed_point(std::string_view id, int order) {
  const int n = order;
  auto solve1 = [&](const std::function<MSeries(const MSeries&)>& map, const Rational& c0) {
    return fixed_point_solve(
        [&](const std::vector<MSeries>& y) { return std::vector<MSeries>{map(y[0])}; },
        {MSeries::constant(c0, XG, 0)}, n, id);
  };
  if (id == "catalan")
    return solve1([](const MSeries& y) {
      return one(y.order()) + var(Var::x, y.order()) * y * y;
    }, 1);
  if (id == "schroder-quadratic")
    return solve1([](const MSeries& y) {
      const MSeries x = var(Var::x, y.order());
      return one(y.order()) + x * y + x * y * y;
    }, 1);
  if (id == "B-cubic-root")
    return solve1([](const MSeries& y) {
      const int k = y.order();
      return one(k) + var(Var::x, k) * y * reciprocal(2 * one(k) - y);
    }, 1);
  if (id == "t-kernel")
    return solve1([this](const MSeries& t) {
      const int k = t.order();
      const MSeries x = var(Var::x, k);
      const MSeries b = large_schroder(k);
      const MSeries t2 = t * t;
      const MSeries x2 = x * x;
      return one(k) - (b * t2 * t * x2 + b * t2 * x2 - b * t2 * x - b * t * x2 + b * x - t2 * x);
    }, 1);
  if (id == "A1-eq2") return solve1([this](const MSeries& a) { return eq2_rhs(a, a.order()); }, 1);
  if (id == "A2-eq5")
    return solve1([this](const MSeries& a) { return eq5_rhs(a, a.order(), false); }, 1);
  if (id == "A3-eq")
    return solve1([this](const MSeries& a) {
      return eq5_rhs(a, a.order(), mutation_ == Mutation::a3_third_term_t);
    }, 1);
  if (id == "Y-eq-3.3") return solve1([this](const MSeries& y) { return y33_rhs(y, y.order()); }, 1);
  if (id == "hg")
    return fixed_point_solve(
        [this](const std::vector<MSeries>& y) { return hg_rhs(y[0], y[1], y[0].order()); },
        {MSeries::constant(1, XG, 0), MSeries::constant(1, XG, 0)}, n, id);
  if (id == "f") {
    const MSeries s = s_closed(n);
    return solve1([&](const MSeries& f) { return f_rhs(f, s, f.order()); }, 0);
  }
  throw ConfigError("unknown equation '" + std::string(id) + "'");
}

MSeries SeriesLab::named(std::string_view name, int order) {
  if (order < 0) throw PreconditionError("negative series order");
  const int n = order;
  if (name == "catalan") return catalan(n);
  if (name == "large-schroder") return large_schroder(n);
  if (name == "little-schroder") return little_schroder(n);
  if (name == "C-star") return c_star(n);
  if (name == "Y") return y_closed(n);
  if (name == "Z") return z_closed(n);
  if (name == "D2") return extraction_d(enum_series("A2", n), n);
  if (name == "D3") return extraction_d(enum_series("A3", n), n);
  if (name == "B-cubic-root") return fixed_point("B-cubic-root", n)[0];
  if (name == "t-kernel") return fixed_point("t-kernel", n)[0];
  if (name == "h" || name == "g") {
    const auto hg = cached("hg:h", n, [&] {
      auto sol = fixed_point("hg", n);
      cache_.emplace(std::make_pair(std::string("hg:g"), n), sol[1]);
      return sol[0];
    });
    if (name == "h") return hg;
    return cache_.at({"hg:g", n});
  }
  if (name == "C3") return c3_from(named("h", n), n);
  if (name == "s-substituted") return s_substituted(n);
  if (name == "s-closed") return s_closed(n);
  if (name == "f") return cached("f", n, [&] { return fixed_point("f", n)[0]; });
  if (name == "f-plus") return f_plus_of(named("f", n));
  if (name == "f-minus") return f_minus_of(named("f", n));
  if (name == "A1-enum") return enum_series("A1", n);
  if (name == "A2-enum") return enum_series("A2", n);
  if (name == "A3-enum") return enum_series("A3", n);
  throw ConfigError("unknown series '" + std::string(name) + "'");
}

IdentityCheck SeriesLab::check(std::string_view id) {
  for (const auto& info : identities())
    if (info.id == id) return check(id, info.default_order);
  throw ConfigError("unknown identity '" + std::string(id) + "'");
}

IdentityCheck SeriesLab::check(std::string_view id, int order) {
  const IdentityInfo* info = nullptr;
  for (const auto& i : identities())
    if (i.id == id) info = &i;
  if (!info) throw ConfigError("unknown identity '" + std::string(id) + "'");
  if (order < 0) throw PreconditionError("negative order");
  if (info->enumeration_backed && order > kMaxEnumerationOrder)
    throw PreconditionError("identity '" + std::string(id) + "' is enumeration-backed; order " +
                            std::to_string(order) + " exceeds " +
                            std::to_string(kMaxEnumerationOrder));
  const int n = order;
  using Sides = std::vector<std::pair<MSeries, MSeries>>;
  const MSeries x = var(Var::x, n);
  const MSeries t = var(Var::t, n);
  auto zero = [&](Grading g = XG) { return MSeries(g, n); };

  Sides sides = [&]() -> Sides {
    if (id == "A1-eq2") {
      const MSeries a1 = enum_series("A1", n);
      return {{a1, eq2_rhs(a1, n)}};
    }
    if (id == "cubic-B") {
      const MSeries b = large_schroder(n);
      const Rational c = mutation_ == Mutation::cubic_coefficient ? 2 : 3;
      return {{b * b + (x - c * one(n)) * b + 2 * one(n), zero()}};
    }
    if (id == "kernel-xt") {
      const MSeries b = large_schroder(n);
      return {{x * little_schroder(n) * b, b - one(n)}};
    }
    if (id == "kernel3-zero") {
      const MSeries b = large_schroder(n);
      const MSeries tt = little_schroder(n);
      const MSeries t2 = tt * tt;
      const MSeries x2 = x * x;
      return {{b * t2 * tt * x2 + b * t2 * x2 - b * t2 * x - b * tt * x2 + b * x - t2 * x + tt -
                   one(n),
               zero()}};
    }
    if (id == "A2-eq5") {
      const MSeries a2 = enum_series("A2", n);
      return {{a2, eq5_rhs(a2, n, false)}};
    }
    if (id == "A3-eq") {
      const MSeries a3 = enum_series("A3", n);
      return {{a3, eq5_rhs(a3, n, mutation_ == Mutation::a3_third_term_t)}};
    }
    if (id == "Y-closed") return {{enum_series("Y", n), y_closed(n)}};
    if (id == "Z-closed") return {{enum_series("Z", n), z_closed(n)}};
    if (id == "Z-from-Y")
      return {{enum_series("Z", n), (one(n) - t * x) * enum_series("Y", n) - one(n)}};
    if (id == "eq12-zero" || id == "t-closed") {
      MSeries tt(XG, n);
      if (id == "t-closed") {
        tt = little_schroder(n);
      } else {
        const MSeries b = large_schroder(n + 1);
        tt = divide_by_x(b - one(n + 1), 1) * reciprocal(b.truncated(n));
      }
      const MSeries cs = substitute(c_star(n), {{Var::t, tt}});
      return {{tt * tt * x + (tt - one(n)) * x * cs - (tt - one(n)), zero()}};
    }
    if (id == "eq13") return {{large_schroder(n) * (one(n) - little_schroder(n) * x), one(n)}};
    if (id == "Y-eq-3.3") return {{fixed_point("Y-eq-3.3", n)[0], y_closed(n)}};
    if (id == "hg-system") {
      const MSeries h = enum_series("h", n);
      const MSeries g = enum_series("g", n);
      const auto rhs = hg_rhs(h, g, n);
      return {{h, rhs[0]}, {g, rhs[1]}};
    }
    if (id == "C3-from-hg") return {{c3_from(named("h", n), n), enum_series("C3", n)}};
    if (id == "s-two-ways") return {{s_substituted(n), s_closed(n)}};
    if (id == "s-vs-simples") return {{s_closed(n), s_simples(n)}};
    if (id == "f-plus") return {{enum_series("f-plus", n), f_plus_of(enum_series("f", n))}};
    if (id == "f-minus") return {{enum_series("f-minus", n), f_minus_of(enum_series("f", n))}};
    if (id == "f-schroder") return {{one(n) + named("f", n), large_schroder(n)}};
    if (id == "Y1-A033321") {
      const MSeries closed =
          2 * reciprocal(one(n) + x + sqrt1((one(n) - x) * (one(n) - 5 * x)));
      return {{y_closed(n).at_one(Var::t), closed}};
    }
    if (id == "A1-solve-schroder")
      return {{fixed_point("A1-eq2", n)[0].at_one(Var::t), large_schroder(n)}};
    if (id == "A2-solve-schroder")
      return {{fixed_point("A2-eq5", n)[0].at_one(Var::t), large_schroder(n)}};
    if (id == "t-kernel-little") return {{fixed_point("t-kernel", n)[0], little_schroder(n)}};
    throw ConfigError("identity '" + std::string(id) + "' has no evaluator");
  }();

  IdentityCheck result;
  result.id = std::string(id);
  result.order = n;
  result.pass = true;
  for (auto& [lhs, rhs] : sides) {
    require_order(lhs, n, id);
    require_order(rhs, n, id);
    Mismatch m;
    if (lhs.truncated(n).first_mismatch(rhs.truncated(n), m.at, m.lhs, m.rhs)) {
      result.pass = false;
      result.mismatch = m;
      break;
    }
  }
  return result;
}

}  // namespace permlab
