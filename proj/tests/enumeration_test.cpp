#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "permlab/counts.hpp"
#include "permlab/decomposition.hpp"
#include "permlab/enumeration.hpp"

using namespace permlab;

namespace {
Permutation P(std::string_view s) { return parse_permutation(s); }

const std::vector<PatternBasis>& registry() {
  static const std::vector<PatternBasis> bases{
      PatternBasis({"2143", "3142"}),  egge_basis("254613"), egge_basis("524361"),
      egge_basis("546132"),            egge_basis("4132"),   egge_basis("263514"),
      PatternBasis({"2413", "3142"}),  PatternBasis({"132"}), PatternBasis({"2143"}),
  };
  return bases;
}

const std::vector<std::uint64_t> kSchroder{1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098};
}  // namespace

TEST(EnumerateClass, Examples) {
  EXPECT_EQ(enumerate_class(PatternBasis({"2143", "3142"}), 3), oracle::all_perms(3));
  EXPECT_EQ(enumerate_class(egge_basis("254613"), 1), std::vector<Permutation>{P("1")});
  EXPECT_EQ(enumerate_class(egge_basis("254613"), 4).size(), 22u);
  EXPECT_EQ(enumerate_class(egge_basis("254613"), 0), std::vector<Permutation>{P("")});
  EXPECT_THROW(enumerate_class(PatternBasis(), 3), PreconditionError);
}

TEST(EnumerateClass, MatchesBruteForceFilterOfSn) {
  for (const auto& basis : registry())
    for (int n = 0; n <= 7; ++n) {
      auto got = enumerate_class(basis, n);
      ASSERT_EQ(got, oracle::av(n, basis.patterns())) << basis.to_string() << " n=" << n;
    }
}

TEST(EnumerateClass, SortedAndDeletionClosed) {
  for (const auto& basis : registry()) {
    auto levels = enumerate_levels(basis, 8);
    for (int n = 1; n <= 8; ++n) {
      auto members = levels[n].sorted_members();
      auto prev = levels[n - 1].sorted_members();
      for (auto& p : members) {
        ASSERT_TRUE(avoids_all(p, basis));
        std::vector<Value> v(p.begin(), p.end());
        v.erase(std::find(v.begin(), v.end(), static_cast<Value>(n)));
        ASSERT_TRUE(std::binary_search(prev.begin(), prev.end(), Permutation(v)));
      }
    }
  }
}

TEST(CountClass, Examples) {
  auto c = count_class(PatternBasis({"2143", "3142"}), 7);
  EXPECT_EQ(c[6], 395u);
  EXPECT_EQ(c[7], 1823u);
  EXPECT_EQ(count_class(egge_basis("524361"), 7),
            std::vector<std::uint64_t>(kSchroder.begin(), kSchroder.begin() + 8));
  EXPECT_EQ(count_class(PatternBasis({"12"}), 4), (std::vector<std::uint64_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(count_class(PatternBasis({"12"}), 0), (std::vector<std::uint64_t>{1}));
  EXPECT_TRUE(count_class(PatternBasis({"12"}), -1).empty());
}

TEST(CountClass, AgreesWithEnumeration) {
  for (const auto& basis : registry()) {
    auto counts = count_class(basis, 9);
    for (int n = 0; n <= 9; ++n)
      ASSERT_EQ(counts[n], enumerate_class(basis, n).size()) << basis.to_string() << " " << n;
  }
}

TEST(Parallel, DeterministicAcrossWorkerCounts) {
  for (const auto& basis : registry()) {
    auto seq = enumerate_levels(basis, 8);
    for (unsigned w : {2u, 3u, 7u}) {
      EnumerationOptions opts;
      opts.workers = w;
      auto par = enumerate_levels(basis, 8, opts);
      for (int n = 0; n <= 8; ++n) {
        ASSERT_EQ(par[n].size(), seq[n].size());
        for (std::size_t i = 0; i < seq[n].size(); ++i)
          ASSERT_TRUE(std::equal(par[n][i].begin(), par[n][i].end(), seq[n][i].begin()));
      }
      EXPECT_EQ(count_class(basis, 9, opts), count_class(basis, 9));
    }
  }
}

TEST(Capacity, ThrowsWithOffendingLength) {
  EnumerationOptions opts;
  opts.capacity = 100;
  try {
    enumerate_class(egge_basis("254613"), 8, opts);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.length(), 6);  // 90 members at n=5 fit, 394 at n=6 do not
  }
  opts.workers = 3;
  EXPECT_THROW(count_class(egge_basis("254613"), 8, opts), CapacityError);
}

TEST(ClassStore, GrowsAndKeepsSnapshots) {
  ClassStore store;
  auto a = store.levels(egge_basis("4132"), 4);
  EXPECT_EQ(a->size(), 5u);
  auto b = store.levels(egge_basis("4132"), 7);
  EXPECT_EQ(b->size(), 8u);
  EXPECT_EQ(a->size(), 5u);
  EXPECT_EQ((*b)[7].size(), count_class(egge_basis("4132"), 7)[7]);
  EXPECT_EQ(store.levels(egge_basis("4132"), 3).get(), b.get());
}

TEST(Simples, Examples) {
  EXPECT_EQ(enumerate_simples(egge_basis("4132"), 4), std::vector<Permutation>{P("2413")});
  for (const auto& basis : registry()) EXPECT_TRUE(enumerate_simples(basis, 3).empty());
  for (int n = 0; n <= 8; ++n)
    EXPECT_EQ(enumerate_simples(egge_basis("263514"), n), enumerate_simples(egge_basis("4132"), n))
        << n;
}

TEST(Simples, MatchOracleFilter) {
  for (int n = 0; n <= 7; ++n) {
    std::vector<Permutation> expected;
    for (auto& p : oracle::av(n, egge_basis("254613").patterns()))
      if (oracle::simple(p)) expected.push_back(p);
    EXPECT_EQ(enumerate_simples(egge_basis("254613"), n), expected);
  }
}

TEST(SetT, Examples) {
  EXPECT_EQ(generate_T(4), std::vector<Permutation>{P("2413")});
  EXPECT_THROW(generate_T(3), PreconditionError);
  auto t12 = generate_T(12);
  EXPECT_TRUE(std::binary_search(t12.begin(), t12.end(), P("2,4,7,9,12,6,8,5,10,1,3,11")));
}

TEST(SetT, EqualsSimplesOfC4132) {
  for (int n = 4; n <= 9; ++n) {
    auto t = generate_T(n);
    EXPECT_EQ(t, enumerate_simples(egge_basis("4132"), n)) << n;
    for (auto& p : t) {
      EXPECT_TRUE(is_simple(p));
      EXPECT_TRUE(avoids_all(p, egge_basis("4132")));
    }
  }
}

TEST(Registry, StatisticAndFilterIds) {
  EXPECT_EQ(parse_statistic("leading-maxima"), Statistic::leading_maxima);
  EXPECT_EQ(parse_statistic("bond"), Statistic::bond);
  EXPECT_EQ(parse_statistic("lr-min"), Statistic::lr_min);
  EXPECT_THROW(parse_statistic("descents"), ConfigError);
  EXPECT_EQ(parse_filter("last-is-max"), Filter::last_entry_equals_length);
  EXPECT_EQ(parse_filter("first-not-min"), Filter::first_entry_not_one);
  EXPECT_THROW(parse_filter("odd"), ConfigError);
  EXPECT_THROW(parse_export_format("xml"), ConfigError);

  EXPECT_TRUE(passes(Filter::first_entry_not_max, P("")));
  EXPECT_TRUE(passes(Filter::last_entry_not_length, P("")));
  EXPECT_FALSE(passes(Filter::last_entry_equals_length, P("")));
  EXPECT_FALSE(passes(Filter::first_entry_not_one, P("")));
  EXPECT_TRUE(passes(Filter::last_entry_equals_length, P("213")));
  EXPECT_FALSE(passes(Filter::first_entry_not_max, P("312")));
  EXPECT_TRUE(passes(Filter::first_entry_not_one, P("213")));
}

TEST(RefinedCount, Examples) {
  auto c = refined_count(PatternBasis({"132"}), 6, {Statistic::bond, Statistic::lr_min},
                         Filter::last_entry_equals_length);
  EXPECT_EQ(c.at(2, {1, 1}), 1u);
  EXPECT_EQ(c.total(2), 1u);
  auto y = refined_count(egge_basis("4132"), 8, {Statistic::leading_maxima});
  EXPECT_EQ(y.at(3, {3}), 1u);
}

TEST(RefinedCount, Invariants) {
  const std::vector<Statistic> all{Statistic::leading_maxima, Statistic::bond, Statistic::lr_min};
  for (const auto& basis : registry()) {
    auto t = refined_count(basis, 8, all);
    auto plain = count_class(basis, 8);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(t.total(n), plain[n]);
    for (const auto& [key, count] : t.counts) {
      const int n = key.first;
      EXPECT_GT(count, 0u);
      EXPECT_LE(key.second[0], n);
      EXPECT_LE(key.second[1], std::max(0, n - 1));
      EXPECT_LE(key.second[2], n);
    }
  }
}

TEST(RefinedCount, FilterMatchesOracle) {
  auto t = refined_count(egge_basis("254613"), 6, {Statistic::lr_min},
                         Filter::first_entry_not_max);
  for (int n = 0; n <= 6; ++n) {
    std::map<int, std::uint64_t> expected;
    for (auto& p : oracle::av(n, egge_basis("254613").patterns()))
      if (n == 0 || p[0] != n) ++expected[lr_minima_count(p)];
    for (auto [m, count] : expected) EXPECT_EQ(t.at(n, {m}), count);
  }
}

TEST(Export, CsvPlainCounts) {
  const auto basis = PatternBasis({"2413", "3142"});
  auto csv = export_counts(count_table(basis, count_class(basis, 5)), ExportFormat::csv);
  EXPECT_EQ(csv, "n,count\n0,1\n1,1\n2,2\n3,6\n4,22\n5,90\n");
  EXPECT_EQ(export_counts(RefinedCountTable{}, ExportFormat::csv), "n,count\n");
}

TEST(Export, CsvRefinedColumnsInDeclaredOrder) {
  auto t = refined_count(PatternBasis({"132"}), 2, {Statistic::lr_min, Statistic::bond});
  EXPECT_EQ(export_counts(t, ExportFormat::csv),
            "n,lr-min,bond,count\n0,0,0,1\n1,1,0,1\n2,1,1,1\n2,2,1,1\n");
}

TEST(Export, JsonRoundTrips) {
  auto t = refined_count(egge_basis("254613"), 6, {Statistic::leading_maxima, Statistic::bond},
                         Filter::first_entry_not_one);
  EXPECT_EQ(counts_from_json(export_counts(t, ExportFormat::json)), t);
  RefinedCountTable empty;
  EXPECT_EQ(counts_from_json(export_counts(empty, ExportFormat::json)), empty);
  EXPECT_THROW(counts_from_json("{\"basis\": 3}"), ParseError);
}

TEST(Cache, ResumesFromDisk) {
  const auto dir = std::filesystem::temp_directory_path() / "permlab_cache_test";
  std::filesystem::remove_all(dir);
  const auto basis = egge_basis("546132");
  auto first = count_class_cached(basis, 7, dir);
  EXPECT_EQ(first, std::vector<std::uint64_t>(kSchroder.begin(), kSchroder.begin() + 8));
  // Poison a cached value: a hit must come from the file, not a recount.
  std::ifstream in(dir / "counts.csv");
  std::string all((std::istreambuf_iterator<char>(in)), {});
  in.close();
  const std::string needle = basis.hash() + ",7,1806";
  ASSERT_NE(all.find(needle), std::string::npos);
  all.replace(all.find(needle), needle.size(), basis.hash() + ",7,42");
  std::ofstream(dir / "counts.csv") << all;
  EXPECT_EQ(count_class_cached(basis, 7, dir)[7], 42u);
  EXPECT_EQ(count_class_cached(basis, 8, dir)[8], 8558u);
  std::filesystem::remove_all(dir);
}
