#include <gtest/gtest.h>

#include "oracle.hpp"
#include "permlab/pattern.hpp"

using namespace permlab;

namespace {
Permutation P(std::string_view s) { return parse_permutation(s); }
}  // namespace

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(P("315462"), P("3142")));
  EXPECT_FALSE(contains(P("123456"), P("2143")));
  EXPECT_FALSE(contains(P("243156"), P("2143")));
  EXPECT_TRUE(contains(P("263514"), P("263514")));
  EXPECT_TRUE(contains(P("21"), P("")));
  EXPECT_TRUE(contains(P(""), P("")));
  EXPECT_FALSE(contains(P("12"), P("123")));
}

TEST(Contains, AgreesWithSubsetOracle) {
  std::vector<Permutation> patterns;
  for (int k = 1; k <= 4; ++k)
    for (auto& p : oracle::all_perms(k)) patterns.push_back(p);
  for (int n = 0; n <= 6; ++n)
    for (auto& host : oracle::all_perms(n))
      for (auto& pat : patterns)
        ASSERT_EQ(contains(host, pat), oracle::contains(host, pat)) << host << " " << pat;
}

TEST(Contains, LongPatternsAgreeWithOracle) {
  for (auto pat : {"254613", "524361", "546132", "263514", "245613"})
    for (auto& host : oracle::all_perms(7))
      ASSERT_EQ(contains(host, P(pat)), oracle::contains(host, P(pat))) << host << " " << pat;
}

TEST(Contains, Monotone) {
  const auto rho = P("21");
  for (int n = 0; n <= 5; ++n)
    for (auto& pi : oracle::all_perms(n))
      for (int k = 1; k <= 4; ++k)
        for (auto& tau : oracle::all_perms(k))
          if (contains(pi, tau)) {
            EXPECT_TRUE(contains(direct_sum(pi, rho), tau));
            EXPECT_TRUE(contains(direct_sum(rho, pi), tau));
            EXPECT_TRUE(contains(skew_sum(pi, rho), tau));
          }
}

TEST(Contains, ThroughMaxMatchesFullSearchOnAvoidingParents) {
  for (auto pat : {"2143", "3142", "254613", "132", "4132"}) {
    CompiledPattern cp(P(pat));
    for (int n = 0; n <= 6; ++n)
      for (auto& parent : oracle::all_perms(n)) {
        if (oracle::contains(parent, P(pat))) continue;
        for (int slot = 0; slot <= n; ++slot) {
          std::vector<Value> child(parent.begin(), parent.end());
          child.insert(child.begin() + slot, static_cast<Value>(n + 1));
          ASSERT_EQ(cp.occurs_through_max(child, slot), cp.occurs_in(child))
              << parent << " slot " << slot << " " << pat;
        }
      }
  }
}

TEST(Basis, Normalizes) {
  PatternBasis b({"3142", "2143", "21", "2143", "312"});
  EXPECT_EQ(b.to_string(), "21");
  PatternBasis c({"254613", "3142", "2143"});
  EXPECT_EQ(c.to_string(), "2143,3142,254613");
  // 254613 contains neither 2143 nor 3142, so it survives
  EXPECT_EQ(c.size(), 3u);
  EXPECT_THROW(PatternBasis(std::vector<Permutation>{Permutation{}}), PreconditionError);
}

TEST(Basis, Parse) {
  EXPECT_EQ(parse_basis("2143,3142,254613"), egge_basis("254613"));
  EXPECT_EQ(parse_basis("2143;3142;254613"), egge_basis("254613"));
  EXPECT_EQ(parse_basis("2143 3142 254613"), egge_basis("254613"));
  EXPECT_EQ(parse_basis("1,2,3,4,5,6,7,8,10,9;21").to_string(), "21");
  EXPECT_THROW(parse_basis("214,3142"), ParseError);
  EXPECT_THROW(parse_basis(""), ParseError);
  EXPECT_THROW(parse_basis("12,,21"), ParseError);
  EXPECT_THROW(parse_basis("12,a"), ParseError);
}

TEST(Basis, HashIsStableAndDistinct) {
  EXPECT_EQ(egge_basis("254613").hash(), parse_basis("3142,2143,254613").hash());
  EXPECT_NE(egge_basis("254613").hash(), egge_basis("524361").hash());
  EXPECT_EQ(egge_basis("254613").hash().size(), 16u);
}

TEST(AvoidsAll, Examples) {
  EXPECT_TRUE(avoids_all(P("243156"), egge_basis("254613")));
  EXPECT_FALSE(avoids_all(P("3142"), PatternBasis({"2143", "3142"})));
  EXPECT_TRUE(avoids_all(P(""), egge_basis("254613")));
}
