#include <gtest/gtest.h>

#include <json.hpp>

#include "oracle.hpp"
#include "permlab/counts.hpp"
#include "permlab/series_lab.hpp"

using namespace permlab;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long c : v) out.emplace_back(c);
  return out;
}

// one store for the whole binary so each class is enumerated once
std::shared_ptr<ClassStore> shared_store() {
  static auto store = std::make_shared<ClassStore>();
  return store;
}

}  // namespace

TEST(Named, Schroder) {
  SeriesLab lab(shared_store());
  EXPECT_EQ(lab.named("large-schroder", 7).x_coefficients(),
            ints({1, 1, 2, 6, 22, 90, 394, 1806}));
  EXPECT_EQ(lab.named("little-schroder", 5).x_coefficients(), ints({1, 1, 3, 11, 45, 197}));
  EXPECT_EQ(lab.named("catalan", 5).x_coefficients(), ints({1, 1, 2, 5, 14, 42}));
}

TEST(Named, LargeSchroderThroughTwenty) {
  SeriesLab lab(shared_store());
  EXPECT_EQ(lab.named("large-schroder", 20).x_coefficients(),
            ints({1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718, 5293446,
                  27297738, 142078746, 745387038, 3937603038, 20927156706, 111818026018,
                  600318853926, 3236724317174}));
}

TEST(Named, CStarSecondCoefficient) {
  SeriesLab lab(shared_store());
  auto c = lab.named("C-star", 6);
  EXPECT_EQ(c.coeff({2, 1, 0}), 1);
  EXPECT_EQ(c.coeff({2, 0, 0}), 2);
}

TEST(Named, SClosedLowestTerm) {
  SeriesLab lab(shared_store());
  auto s = lab.named("s-closed", 8);
  EXPECT_EQ(s.valuation(), 4);
  ASSERT_EQ(s.grade(4).size(), 1u);
  EXPECT_EQ(s.coeff({2, 0, 2}), 1);
}

TEST(Named, EnumerationBackedAgreesWithCounts) {
  SeriesLab lab(shared_store());
  auto a1 = lab.named("A1-enum", 7);
  EXPECT_EQ(a1.at_one(Var::t).x_coefficients(), ints({1, 1, 2, 6, 22, 90, 394, 1806}));
  // ℓ(π) sums over the brute-force class
  for (int n = 0; n <= 6; ++n) {
    std::map<int, long> by_l;
    for (const auto& p : oracle::av(n, egge_basis("254613").patterns())) ++by_l[leading_maxima_count(p)];
    for (auto [l, c] : by_l) EXPECT_EQ(a1.coeff({n, l, 0}), c) << n << " " << l;
  }
}

TEST(Named, YEnumMatchesY) {
  SeriesLab lab(shared_store());
  auto y = lab.named("Y", 8);
  auto counts = refined_count(egge_basis("4132"), 8, {Statistic::leading_maxima});
  for (const auto& [key, count] : counts.counts)
    EXPECT_EQ(y.coeff({key.first, key.second[0], 0}), static_cast<long>(count));
}

TEST(Named, Errors) {
  SeriesLab lab(shared_store());
  EXPECT_THROW(lab.named("no-such", 4), ConfigError);
  EXPECT_THROW(lab.named("A1-enum", kMaxEnumerationOrder + 1), PreconditionError);
  EXPECT_THROW(lab.check("s-vs-simples", kMaxEnumerationOrder + 1), PreconditionError);
  EXPECT_THROW(lab.check("no-such", 4), ConfigError);
  EXPECT_THROW(lab.fixed_point("no-such", 4), ConfigError);
  EXPECT_THROW(parse_mutation("bogus"), ConfigError);
}

TEST(FixedPoint, CatalanMatchesBruteForce) {
  SeriesLab lab(shared_store());
  auto c = lab.fixed_point("catalan", 7)[0].x_coefficients();
  for (int n = 0; n <= 7; ++n)
    EXPECT_EQ(c[n], static_cast<long>(oracle::av(n, PatternBasis({"132"}).patterns()).size()));
}

TEST(FixedPoint, SchroderForms) {
  SeriesLab lab(shared_store());
  const auto big = lab.named("large-schroder", 12);
  EXPECT_EQ(lab.fixed_point("B-cubic-root", 12)[0], big);
  auto quad = lab.fixed_point("schroder-quadratic", 9)[0].x_coefficients();
  EXPECT_EQ(quad, ints({1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098}));
  EXPECT_EQ(lab.fixed_point("t-kernel", 12)[0], lab.named("little-schroder", 12));
}

TEST(FixedPoint, HgGivesC3WithLowestTermUtx2) {
  SeriesLab lab(shared_store());
  auto c3 = lab.named("C3", 10);
  EXPECT_EQ(c3.valuation(), 2);
  ASSERT_EQ(c3.grade(2).size(), 1u);
  EXPECT_EQ(c3.coeff({2, 1, 1}), 1);
  // total count: Av_n(132) ending in n is Catalan(n-1)
  EXPECT_EQ(c3.at_one(Var::t).at_one(Var::u).x_coefficients(),
            ints({0, 0, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}));
}

TEST(FixedPoint, FPlusOneIsSchroder) {
  SeriesLab lab(shared_store());
  auto f = lab.named("f", 7);
  EXPECT_EQ((f + MSeries::constant(1, Grading::x_degree, 7)).x_coefficients(),
            ints({1, 1, 2, 6, 22, 90, 394, 1806}));
}

TEST(FixedPoint, DivergenceIsReported) {
  const auto X = Grading::x_degree;
  auto doubling = [](const std::vector<MSeries>& y) { return std::vector<MSeries>{2 * y[0]}; };
  auto same = [](const std::vector<MSeries>& y) { return y; };
  auto shift = [](const std::vector<MSeries>& y) {
    auto one = MSeries::constant(1, Grading::x_degree, y[0].order());
    return std::vector<MSeries>{one + MSeries::variable(Var::x, Grading::x_degree, y[0].order()) * y[0]};
  };
  try {
    fixed_point_solve(doubling, {MSeries::constant(1, X, 0)}, 5, "doubling");
    FAIL();
  } catch (const SeriesError& e) {
    EXPECT_NE(std::string(e.what()).find("doubling"), std::string::npos);
  }
  EXPECT_THROW(fixed_point_solve(same, {MSeries::constant(1, X, 0)}, 5, "same"), SeriesError);
  auto geo = fixed_point_solve(shift, {MSeries::constant(1, X, 0)}, 6, "geo")[0];
  EXPECT_EQ(geo.x_coefficients(), ints({1, 1, 1, 1, 1, 1, 1}));
}

TEST(Identities, SpecExamples) {
  SeriesLab lab(shared_store());
  EXPECT_TRUE(lab.check("cubic-B", 20).pass);
  EXPECT_TRUE(lab.check("kernel-xt", 20).pass);
  EXPECT_TRUE(lab.check("eq13", 20).pass);
  EXPECT_TRUE(lab.check("s-two-ways", 14).pass);
  EXPECT_TRUE(lab.check("Y1-A033321", 12).pass);
}

TEST(Identities, AllPassAtDefaultOrder) {
  SeriesLab lab(shared_store());
  for (const auto& info : SeriesLab::identities()) {
    auto r = lab.check(info.id);
    EXPECT_TRUE(r.pass) << r.to_json();
    EXPECT_FALSE(r.mismatch.has_value());
    EXPECT_EQ(r.order, info.enumeration_backed ? 10 : 20);
  }
}

TEST(Identities, TrivialOrders) {
  SeriesLab lab(shared_store());
  for (const auto& info : SeriesLab::identities())
    EXPECT_TRUE(lab.check(info.id, 1).pass) << info.id;
}

TEST(Identities, Json) {
  SeriesLab lab(shared_store(), Mutation::cubic_coefficient);
  auto r = lab.check("cubic-B", 6);
  ASSERT_FALSE(r.pass);
  auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["id"], "cubic-B");
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["firstMismatch"]["exponent"]["x"], 0);
  // B = 1 + ...: 1 + (-2) + 2 = 1 against 0
  EXPECT_EQ(j["firstMismatch"]["lhs"], "1");
  EXPECT_EQ(j["firstMismatch"]["rhs"], "0");
  auto ok = nlohmann::json::parse(SeriesLab(shared_store()).check("cubic-B", 6).to_json());
  EXPECT_TRUE(ok["firstMismatch"].is_null());
  EXPECT_EQ(ok["status"], "pass");
}

TEST(Mutations, EachBreaksSomeIdentity) {
  for (Mutation m : all_mutations()) {
    SeriesLab lab(shared_store(), m);
    EXPECT_EQ(parse_mutation(mutation_id(m)), m);
    std::vector<std::string> failed;
    for (const auto& info : SeriesLab::identities()) {
      IdentityCheck r;
      try {
        r = lab.check(info.id);
      } catch (const SeriesError&) {
        failed.push_back(info.id + " (error)");
        continue;
      }
      if (!r.pass) {
        EXPECT_TRUE(r.mismatch.has_value());
        EXPECT_NE(r.mismatch->lhs, r.mismatch->rhs);
        failed.push_back(info.id);
      }
    }
    EXPECT_FALSE(failed.empty()) << mutation_id(m);
  }
}

TEST(Mutations, TargetedFailures) {
  auto fails = [](Mutation m, const char* id) {
    SeriesLab lab(shared_store(), m);
    return !lab.check(id).pass;
  };
  EXPECT_TRUE(fails(Mutation::a3_third_term_t, "A3-eq"));
  EXPECT_TRUE(fails(Mutation::eq2_drop_correction, "A1-eq2"));
  EXPECT_TRUE(fails(Mutation::y_numerator, "Y-closed"));
  EXPECT_TRUE(fails(Mutation::z_numerator, "Z-closed"));
  EXPECT_TRUE(fails(Mutation::h_term, "hg-system"));
  EXPECT_TRUE(fails(Mutation::c3_bond_term, "C3-from-hg"));
  EXPECT_TRUE(fails(Mutation::s_printed_branch, "s-vs-simples"));
  EXPECT_TRUE(fails(Mutation::s_exponent, "s-two-ways"));
  EXPECT_TRUE(fails(Mutation::f_plus_overlap, "f-plus"));
  EXPECT_TRUE(fails(Mutation::f_minus, "f-minus"));
  EXPECT_TRUE(fails(Mutation::catalan_substitution_sign, "eq12-zero"));
  EXPECT_TRUE(fails(Mutation::little_schroder_denominator, "kernel-xt"));
  // the A3 equation with the factor t is the A2 equation, which A2 satisfies
  EXPECT_FALSE(fails(Mutation::a3_third_term_t, "A2-eq5"));
}
