#pragma once

// Class counts refined by permutation statistics, with CSV/JSON export and
// an on-disk count cache.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permlab/enumeration.hpp"

namespace permlab {

enum class Statistic { leading_maxima, bond, lr_min };

/// π_n = n, π₁ ≠ n, π_n ≠ n, π₁ ≠ 1. The empty permutation passes the two
/// "≠" filters and fails the other two.
enum class Filter {
  none,
  last_entry_equals_length,
  first_entry_not_max,
  last_entry_not_length,
  first_entry_not_one,
};

/// Ids: leading-maxima, bond, lr-min. Throws ConfigError.
Statistic parse_statistic(std::string_view id);
std::string_view statistic_id(Statistic s);
int statistic_value(Statistic s, PermView p);

/// Ids: none, last-entry-equals-length (alias last-is-max),
/// first-entry-not-max, last-entry-not-length, first-entry-not-one (alias
/// first-not-min). Throws ConfigError.
Filter parse_filter(std::string_view id);
std::string_view filter_id(Filter f);
bool passes(Filter f, PermView p);

struct RefinedCountTable {
  PatternBasis basis;
  int max_length = -1;
  std::vector<Statistic> stats;
  Filter filter = Filter::none;
  /// (n, statistic values in declared order) -> count; zero entries omitted.
  std::map<std::pair<int, std::vector<int>>, std::uint64_t> counts;

  std::uint64_t at(int n, const std::vector<int>& values) const;
  std::uint64_t total(int n) const;

  friend bool operator==(const RefinedCountTable&, const RefinedCountTable&) = default;
};

RefinedCountTable refined_count(const PatternBasis& basis, int max_n,
                                std::vector<Statistic> stats, Filter filter = Filter::none,
                                const EnumerationOptions& options = {});

/// Tabulates already enumerated levels under an arbitrary predicate. The
/// table's filter field is left at none.
RefinedCountTable tabulate(const PatternBasis& basis, const ClassLevels& levels,
                           std::vector<Statistic> stats,
                           const std::function<bool(PermView)>& keep);

/// Plain counts (no statistics) as a table.
RefinedCountTable count_table(const PatternBasis& basis,
                              const std::vector<std::uint64_t>& counts);

enum class ExportFormat { csv, json };

/// "csv" or "json". Throws ConfigError.
ExportFormat parse_export_format(std::string_view id);

/// CSV: header "n,<stat ids...>,count", then one row per record in key
/// order. JSON: {"basis","maxLength","stats","filter","records":[{n,stats,count}]}.
std::string export_counts(const RefinedCountTable& table, ExportFormat format);

/// Inverse of the JSON export. Throws ParseError on malformed input.
RefinedCountTable counts_from_json(std::string_view text);

/// count_class backed by "<dir>/counts.csv", whose lines are
/// "basis-hash,n,count". Missing lengths are computed and appended.
std::vector<std::uint64_t> count_class_cached(const PatternBasis& basis, int max_n,
                                              const std::filesystem::path& dir,
                                              const EnumerationOptions& options = {});

}  // namespace permlab
