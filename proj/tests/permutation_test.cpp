#include <gtest/gtest.h>

#include <sstream>

#include "oracle.hpp"
#include "permlab/permutation.hpp"

using namespace permlab;

namespace {
Permutation P(std::string_view s) { return parse_permutation(s); }
}  // namespace

TEST(Parse, DigitAndLongForm) {
  EXPECT_EQ(P("2413"), (Permutation{2, 4, 1, 3}));
  EXPECT_EQ(P("2,4,1,3"), (Permutation{2, 4, 1, 3}));
  EXPECT_TRUE(P("").empty());
  EXPECT_EQ(P("10,1,2,3,4,5,6,7,8,9").size(), 10u);
}

TEST(Parse, ErrorsNameTheToken) {
  try {
    P("2414");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'4'"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
  EXPECT_THROW(P("214"), ParseError);
  EXPECT_THROW(P("1,x,2"), ParseError);
  EXPECT_THROW(P("1,0"), ParseError);
  EXPECT_THROW(P("1,,2"), ParseError);
  EXPECT_THROW(P("20"), ParseError);
  EXPECT_THROW(P("1234567891"), ParseError);
}

TEST(Parse, RoundTripsThroughToString) {
  for (int n = 0; n <= 5; ++n)
    for (auto& p : oracle::all_perms(n)) EXPECT_EQ(P(p.to_string()), p);
  auto big = P("3,1,2,4,5,6,7,8,9,10,11");
  EXPECT_EQ(big.to_string(), "3,1,2,4,5,6,7,8,9,10,11");
  EXPECT_EQ(P(big.to_string()), big);
}

TEST(Permutation, ConstructorValidates) {
  EXPECT_THROW((Permutation{1, 1}), PreconditionError);
  EXPECT_THROW((Permutation{0, 1}), PreconditionError);
  EXPECT_THROW((Permutation{1, 3}), PreconditionError);
  std::ostringstream os;
  os << Permutation{};
  EXPECT_EQ(os.str(), "∅");
}

TEST(Statistics, LrMaxima) {
  EXPECT_EQ(lr_maxima(P("243156")), (IndexSet{1, 2, 5, 6}));
  EXPECT_EQ(lr_maxima(P("123")), (IndexSet{1, 2, 3}));
  EXPECT_EQ(lr_maxima(P("321")), (IndexSet{1}));
  EXPECT_TRUE(lr_maxima(P("")).empty());
}

TEST(Statistics, LeadingMaxima) {
  EXPECT_EQ(leading_maxima_count(P("12345")), 5);
  EXPECT_EQ(leading_maxima_count(P("243156")), 2);
  EXPECT_EQ(leading_maxima_count(P("321")), 1);
  EXPECT_EQ(leading_maxima_count(P("")), 0);
}

TEST(Statistics, HorizontalGaps) {
  EXPECT_EQ(horizontal_gaps(P("243156")), (IndexSet{2}));
  EXPECT_TRUE(horizontal_gaps(P("1234")).empty());
  EXPECT_EQ(horizontal_gaps(P("2413")), (IndexSet{2}));
}

TEST(Statistics, HorizontalGapsMatchDefinition) {
  for (int n = 0; n <= 6; ++n)
    for (auto& p : oracle::all_perms(n)) {
      auto lr = lr_maxima(p);
      IndexSet expected;
      for (int i : lr)
        if (i < n && std::find(lr.begin(), lr.end(), i + 1) == lr.end()) expected.push_back(i);
      EXPECT_EQ(horizontal_gaps(p), expected) << p;
    }
}

TEST(Statistics, LrMinima) {
  EXPECT_EQ(lr_minima(P("12")), (IndexSet{1}));
  EXPECT_EQ(lr_minima(P("321")), (IndexSet{1, 2, 3}));
  EXPECT_EQ(lr_minima(P("2413")), (IndexSet{1, 3}));
  EXPECT_EQ(lr_minima_count(P("2413")), 2);
}

TEST(Statistics, Bonds) {
  EXPECT_EQ(bond_count(P("12")), 1);
  EXPECT_EQ(bond_count(P("2413")), 0);
  EXPECT_EQ(bond_count(P("546132")), 2);
  EXPECT_EQ(bond_count(P("1")), 0);
  EXPECT_EQ(bond_count(P("")), 0);
}

TEST(Sums, Examples) {
  EXPECT_EQ(direct_sum(P("1"), P("1")), P("12"));
  EXPECT_EQ(skew_sum(P("1"), P("231")), P("4231"));
  EXPECT_EQ(direct_sum(P("12"), P("1")), P("123"));
  EXPECT_EQ(direct_sum(P(""), P("21")), P("21"));
  EXPECT_EQ(skew_sum(P("21"), P("")), P("21"));
}

TEST(Extraction, Examples) {
  EXPECT_EQ(extraction(P("1"), P("231"), 1), P("2431"));
  EXPECT_EQ(direct_sum(extraction(P("1"), P("231"), 1), P("12")), P("243156"));
  EXPECT_EQ(extraction(P("1"), P("12"), 1), P("132"));
  EXPECT_EQ(extraction(P("21"), P("312"), 0), skew_sum(P("21"), P("312")));
  EXPECT_THROW(extraction(P("1"), P("231"), 3), PreconditionError);
  EXPECT_THROW(extraction(P("1"), P("231"), -1), PreconditionError);
  EXPECT_EQ(extraction(P(""), P("231"), 2), P("231"));
}

TEST(Extraction, LengthAndLeadingMaxima) {
  for (int n = 1; n <= 6; ++n)
    for (auto& beta : oracle::all_perms(n)) {
      const int l = leading_maxima_count(beta);
      for (int i = 1; i <= std::min(l, n - 1); ++i) {
        auto r = extraction(P("1"), beta, i);
        EXPECT_EQ(r.size(), beta.size() + 1);
        EXPECT_EQ(leading_maxima_count(r), i + 1) << beta << " i=" << i;
      }
    }
}

TEST(Deletion, StripLeadingMaxima) {
  EXPECT_EQ(strip_leading_maxima(P("243156")), P("2134"));
  EXPECT_TRUE(strip_leading_maxima(P("123")).empty());
  EXPECT_EQ(strip_leading_maxima(P("2413")), P("12"));
}

TEST(Deletion, DeleteLrMaxima) {
  EXPECT_EQ(delete_lr_maxima(P("243156")), P("21"));
  EXPECT_TRUE(delete_lr_maxima(P("1234")).empty());
  EXPECT_EQ(delete_lr_maxima(P("2413")), P("12"));
}

TEST(Decomposability, MatchesBruteForce) {
  for (int n = 1; n <= 6; ++n)
    for (auto& p : oracle::all_perms(n)) {
      bool sum = false, skew = false;
      for (int k = 1; k < n; ++k) {
        auto head = std::vector<Value>(p.begin(), p.begin() + k);
        auto tail = std::vector<Value>(p.begin() + k, p.end());
        sum |= *std::max_element(head.begin(), head.end()) <
               *std::min_element(tail.begin(), tail.end());
        skew |= *std::min_element(head.begin(), head.end()) >
                *std::max_element(tail.begin(), tail.end());
      }
      EXPECT_EQ(is_sum_decomposable(p), sum) << p;
      EXPECT_EQ(is_skew_decomposable(p), skew) << p;
    }
}

TEST(Standardize, Generic) {
  std::vector<int> seq{40, 7, 19, 100};
  EXPECT_EQ(standardize<int>(seq), P("3124"));
  EXPECT_TRUE(is_identity(P("123")));
  EXPECT_FALSE(is_identity(P("132")));
}
