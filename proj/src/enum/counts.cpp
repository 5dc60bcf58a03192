#include "permlab/counts.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace permlab {

namespace {

constexpr std::pair<std::string_view, Statistic> kStatistics[] = {
    {"leading-maxima", Statistic::leading_maxima},
    {"bond", Statistic::bond},
    {"lr-min", Statistic::lr_min},
};

constexpr std::pair<std::string_view, Filter> kFilters[] = {
    {"none", Filter::none},
    {"last-entry-equals-length", Filter::last_entry_equals_length},
    {"first-entry-not-max", Filter::first_entry_not_max},
    {"last-entry-not-length", Filter::last_entry_not_length},
    {"first-entry-not-one", Filter::first_entry_not_one},
    {"last-is-max", Filter::last_entry_equals_length},
    {"first-not-min", Filter::first_entry_not_one},
};

}  // namespace

Statistic parse_statistic(std::string_view id) {
  for (auto [name, s] : kStatistics)
    if (name == id) return s;
  throw ConfigError("unknown statistic '" + std::string(id) + "'");
}

std::string_view statistic_id(Statistic s) {
  for (auto [name, value] : kStatistics)
    if (value == s) return name;
  return "?";
}

int statistic_value(Statistic s, PermView p) {
  switch (s) {
    case Statistic::leading_maxima: return leading_maxima_count(p);
    case Statistic::bond: return bond_count(p);
    case Statistic::lr_min: return lr_minima_count(p);
  }
  return 0;
}

Filter parse_filter(std::string_view id) {
  for (auto [name, f] : kFilters)
    if (name == id) return f;
  throw ConfigError("unknown filter '" + std::string(id) + "'");
}

std::string_view filter_id(Filter f) {
  for (auto [name, value] : kFilters)
    if (value == f) return name;
  return "?";
}

bool passes(Filter f, PermView p) {
  const std::size_t n = p.size();
  switch (f) {
    case Filter::none: return true;
    case Filter::last_entry_equals_length: return n > 0 && p[n - 1] == n;
    case Filter::first_entry_not_max: return n == 0 || p[0] != n;
    case Filter::last_entry_not_length: return n == 0 || p[n - 1] != n;
    case Filter::first_entry_not_one: return n > 0 && p[0] != 1;
  }
  return false;
}

std::uint64_t RefinedCountTable::at(int n, const std::vector<int>& values) const {
  auto it = counts.find({n, values});
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t RefinedCountTable::total(int n) const {
  std::uint64_t sum = 0;
  for (auto it = counts.lower_bound({n, {}}); it != counts.end() && it->first.first == n; ++it)
    sum += it->second;
  return sum;
}

RefinedCountTable tabulate(const PatternBasis& basis, const ClassLevels& levels,
                           std::vector<Statistic> stats,
                           const std::function<bool(PermView)>& keep) {
  RefinedCountTable table;
  table.basis = basis;
  table.max_length = static_cast<int>(levels.size()) - 1;
  table.stats = std::move(stats);
  std::vector<int> values(table.stats.size());
  for (const auto& level : levels) {
    for (std::size_t i = 0; i < level.size(); ++i) {
      PermView p = level[i];
      if (!keep(p)) continue;
      for (std::size_t s = 0; s < values.size(); ++s)
        values[s] = statistic_value(table.stats[s], p);
      ++table.counts[{level.length(), values}];
    }
  }
  return table;
}

RefinedCountTable refined_count(const PatternBasis& basis, int max_n,
                                std::vector<Statistic> stats, Filter filter,
                                const EnumerationOptions& options) {
  RefinedCountTable table =
      tabulate(basis, enumerate_levels(basis, max_n, options), std::move(stats),
               [filter](PermView p) { return passes(filter, p); });
  table.filter = filter;
  return table;
}

RefinedCountTable count_table(const PatternBasis& basis,
                              const std::vector<std::uint64_t>& counts) {
  RefinedCountTable table;
  table.basis = basis;
  table.max_length = static_cast<int>(counts.size()) - 1;
  for (std::size_t n = 0; n < counts.size(); ++n)
    if (counts[n]) table.counts[{static_cast<int>(n), {}}] = counts[n];
  return table;
}

ExportFormat parse_export_format(std::string_view id) {
  if (id == "csv") return ExportFormat::csv;
  if (id == "json") return ExportFormat::json;
  throw ConfigError("unknown export format '" + std::string(id) + "'");
}

std::string export_counts(const RefinedCountTable& table, ExportFormat format) {
  if (format == ExportFormat::csv) {
    std::ostringstream out;
    out << "n";
    for (auto s : table.stats) out << ',' << statistic_id(s);
    out << ",count\n";
    for (const auto& [key, count] : table.counts) {
      out << key.first;
      for (int v : key.second) out << ',' << v;
      out << ',' << count << '\n';
    }
    return out.str();
  }
  nlohmann::json j;
  j["basis"] = table.basis.to_string();
  j["maxLength"] = table.max_length;
  j["stats"] = nlohmann::json::array();
  for (auto s : table.stats) j["stats"].push_back(statistic_id(s));
  j["filter"] = filter_id(table.filter);
  j["records"] = nlohmann::json::array();
  for (const auto& [key, count] : table.counts)
    j["records"].push_back({{"n", key.first}, {"stats", key.second}, {"count", count}});
  return j.dump(2) + "\n";
}

RefinedCountTable counts_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RefinedCountTable table;
    const auto basis = j.at("basis").get<std::string>();
    if (!basis.empty()) table.basis = parse_basis(basis);
    table.max_length = j.at("maxLength").get<int>();
    for (const auto& s : j.at("stats")) table.stats.push_back(parse_statistic(s.get<std::string>()));
    table.filter = parse_filter(j.at("filter").get<std::string>());
    for (const auto& r : j.at("records")) {
      auto values = r.at("stats").get<std::vector<int>>();
      if (values.size() != table.stats.size())
        throw ParseError("record arity does not match stats");
      table.counts[{r.at("n").get<int>(), std::move(values)}] = r.at("count").get<std::uint64_t>();
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed count table: ") + e.what());
  } catch (const ConfigError& e) {
    throw ParseError(std::string("malformed count table: ") + e.what());
  }
}

std::vector<std::uint64_t> count_class_cached(const PatternBasis& basis, int max_n,
                                              const std::filesystem::path& dir,
                                              const EnumerationOptions& options) {
  const std::string key = basis.hash();
  const auto file = dir / "counts.csv";
  std::map<int, std::uint64_t> known;
  if (std::ifstream in{file}) {
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream row(line);
      std::string hash, n, count;
      if (!std::getline(row, hash, ',') || !std::getline(row, n, ',') ||
          !std::getline(row, count))
        continue;
      if (hash != key) continue;
      try {
        known[std::stoi(n)] = std::stoull(count);
      } catch (const std::exception&) {
        // unreadable line; it will be recomputed
      }
    }
  }
  std::vector<std::uint64_t> counts;
  for (int n = 0; n <= max_n; ++n) {
    auto it = known.find(n);
    if (it == known.end()) break;
    counts.push_back(it->second);
  }
  if (static_cast<int>(counts.size()) == max_n + 1) return counts;

  counts = count_class(basis, max_n, options);
  std::filesystem::create_directories(dir);
  std::ofstream out(file, std::ios::app);
  for (int n = 0; n <= max_n; ++n)
    if (!known.count(n)) out << key << ',' << n << ',' << counts[n] << '\n';
  return counts;
}

}  // namespace permlab
