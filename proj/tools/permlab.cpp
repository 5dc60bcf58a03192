// permlab: enumeration, refined statistics, series and verification from the
// command line. Exit status 0 on success, 1 on a failed check or capacity
// error, 2 on a usage error.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permlab/counts.hpp"
#include "permlab/decomposition.hpp"
#include "permlab/enumeration.hpp"
#include "permlab/series_lab.hpp"
#include "permlab/verify.hpp"

using namespace permlab;

namespace {

struct Config {
  std::string basis;
  int max_n = 8;
  std::optional<int> n;
  int order = 12;
  std::string format = "table";
  std::string cache_dir;
  unsigned parallelism = 1;
  std::size_t capacity = EnumerationOptions{}.capacity;
  std::vector<std::string> stats;
  std::string filter = "none";
  std::string name;
  std::string id;
  bool all = false;
  std::string mutation = "none";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EnumerationOptions options_of(const Config& c) { return {c.parallelism, c.capacity}; }

// Space-separated columns under a header.
void print_rows(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) std::cout << "  ";
      std::cout << std::setw(static_cast<int>(width[i])) << r[i];
    }
    std::cout << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void print_table(const RefinedCountTable& t) {
  std::vector<std::string> header{"n"};
  for (Statistic s : t.stats) header.emplace_back(statistic_id(s));
  header.emplace_back("count");
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, count] : t.counts) {
    std::vector<std::string> r{std::to_string(key.first)};
    for (int v : key.second) r.push_back(std::to_string(v));
    r.push_back(std::to_string(count));
    rows.push_back(std::move(r));
  }
  print_rows(header, rows);
}

void emit_counts(const RefinedCountTable& t, const std::string& format) {
  if (format == "table")
    print_table(t);
  else
    std::cout << export_counts(t, parse_export_format(format));
}

int cmd_count(const Config& c) {
  const PatternBasis basis = parse_basis(c.basis);
  std::string dir = c.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("PERMLAB_CACHE_DIR")) dir = env;
  const auto counts = dir.empty() ? count_class(basis, c.max_n, options_of(c))
                                  : count_class_cached(basis, c.max_n, dir, options_of(c));
  emit_counts(count_table(basis, counts), c.format);
  return 0;
}

int cmd_enumerate(const Config& c) {
  const PatternBasis basis = parse_basis(c.basis);
  const int n = c.n.value_or(c.max_n);
  const auto perms = enumerate_class(basis, n, options_of(c));
  if (c.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& p : perms) list.push_back(p.to_string());
    std::cout << nlohmann::json{{"basis", basis.to_string()}, {"n", n}, {"perms", list}}.dump()
              << '\n';
    return 0;
  }
  if (c.format == "csv") std::cout << "perm\n";
  for (const auto& p : perms) std::cout << p.to_string() << '\n';
  return 0;
}

int cmd_stat(const Config& c) {
  const PatternBasis basis = parse_basis(c.basis);
  std::vector<Statistic> stats;
  for (const auto& s : c.stats) stats.push_back(parse_statistic(s));
  const auto table = refined_count(basis, c.max_n, stats, parse_filter(c.filter), options_of(c));
  emit_counts(table, c.format);
  return 0;
}

int cmd_simples(const Config& c) {
  const PatternBasis basis = parse_basis(c.basis);
  const int lo = c.n.value_or(1);
  const int hi = c.n.value_or(c.max_n);
  const auto levels = enumerate_levels(basis, hi, options_of(c));
  std::vector<std::pair<int, Permutation>> found;
  for (int n = lo; n <= hi; ++n) {
    std::vector<Permutation> level;
    for (std::size_t i = 0; i < levels[n].size(); ++i)
      if (is_simple(levels[n][i])) level.push_back(Permutation::from_view(levels[n][i]));
    std::sort(level.begin(), level.end());
    for (auto& p : level) found.emplace_back(n, std::move(p));
  }
  if (c.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [n, p] : found) list.push_back({{"n", n}, {"perm", p.to_string()}});
    std::cout << nlohmann::json{{"basis", basis.to_string()}, {"simples", list}}.dump() << '\n';
  } else if (c.format == "csv") {
    std::cout << "n,perm\n";
    for (const auto& [n, p] : found) std::cout << n << ',' << p.to_string() << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [n, p] : found) rows.push_back({std::to_string(n), p.to_string()});
    print_rows({"n", "perm"}, rows);
  }
  return 0;
}

int cmd_series(const Config& c) {
  if (c.name.empty()) throw UsageError("series needs --name");
  const auto& names = SeriesLab::series_names();
  if (std::find(names.begin(), names.end(), c.name) == names.end()) {
    std::string valid;
    for (const auto& n : names) valid += " " + n;
    throw UsageError("unknown series '" + c.name + "'; valid names:" + valid);
  }
  auto store = std::make_shared<ClassStore>(options_of(c));
  SeriesLab lab(store, parse_mutation(c.mutation));
  const MSeries s = lab.named(c.name, c.order);
  const bool univariate = (s.variables() & ~1u) == 0;
  if (c.format == "table") {
    if (univariate) {
      const auto coeffs = s.x_coefficients();
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        std::cout << (i ? " " : "") << coeffs[i].get_str();
      std::cout << '\n';
    } else {
      std::cout << s.to_text();
    }
    return 0;
  }
  std::vector<std::pair<Exponent, Rational>> terms;
  for (int d = 0; d <= s.order(); ++d)
    for (const auto& [e, q] : s.grade(d)) terms.emplace_back(e, q);
  if (c.format == "csv") {
    std::cout << "x,t,u,coeff\n";
    for (const auto& [e, q] : terms)
      std::cout << e[0] << ',' << e[1] << ',' << e[2] << ',' << q.get_str() << '\n';
  } else {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [e, q] : terms)
      list.push_back({{"x", e[0]}, {"t", e[1]}, {"u", e[2]}, {"coeff", q.get_str()}});
    const char* grading = s.grading() == Grading::x_degree ? "x-degree" : "total-degree";
    std::cout << nlohmann::json{{"name", c.name}, {"order", c.order}, {"grading", grading},
                                {"terms", list}}
                     .dump()
              << '\n';
  }
  return 0;
}

void print_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
  if (format == "json") {
    for (const auto& r : reports) std::cout << r.to_json() << '\n';
    return;
  }
  if (format == "csv") {
    std::cout << "checkId,maxN,status,witnesses,elapsedMillis\n";
    for (const auto& r : reports)
      std::cout << r.check_id << ',' << r.max_n << ',' << (r.pass ? "pass" : "fail") << ','
                << r.witnesses.size() << ',' << r.elapsed_millis << '\n';
    return;
  }
  std::size_t passed = 0;
  std::size_t width = 0;
  for (const auto& r : reports) width = std::max(width, r.check_id.size());
  for (const auto& r : reports) {
    passed += r.pass;
    std::cout << (r.pass ? "pass  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
              << r.check_id << std::right << "  n=" << r.max_n << '\n';
    // a few witnesses are enough to act on
    for (std::size_t i = 0; i < r.witnesses.size() && i < 5; ++i) {
      const auto& w = r.witnesses[i];
      std::cout << "      " << (w.perm.empty() ? "-" : w.perm.to_string()) << ": " << w.reason
                << '\n';
    }
    if (r.witnesses.size() > 5) std::cout << "      ... " << r.witnesses.size() - 5 << " more\n";
  }
  std::cout << passed << "/" << reports.size() << " passed\n";
}

int cmd_verify(const Config& c, bool max_n_given, bool order_given) {
  auto store = std::make_shared<ClassStore>(options_of(c));
  Verifier v(store, parse_mutation(c.mutation));
  std::vector<VerificationReport> reports;
  if (!c.id.empty() && !c.all) {
    const auto& ids = SeriesLab::identities();
    auto identity = std::find_if(ids.begin(), ids.end(), [&](const IdentityInfo& i) { return i.id == c.id; });
    if (Verifier::is_check(c.id)) {
      int n = c.max_n;
      if (!max_n_given)
        for (const auto& info : Verifier::checks())
          if (info.id == c.id) n = info.default_max_n;
      reports.push_back(v.run(c.id, n));
    } else if (identity != ids.end()) {
      reports.push_back(v.run_identity(c.id, order_given ? c.order : identity->default_order));
    } else {
      std::string valid;
      for (const auto& info : Verifier::checks()) valid += " " + info.id;
      for (const auto& info : ids) valid += " " + info.id;
      throw UsageError("unknown check '" + c.id + "'; valid ids:" + valid);
    }
  } else {
    reports = v.run_all(c.max_n, c.order);
  }
  print_reports(reports, c.format);
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern-avoiding permutation classes: counts, statistics, series, checks"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub, bool needs_basis) {
    if (needs_basis)
      sub->add_option("--basis", c.basis, "patterns, e.g. 2143,3142,254613")->required();
    sub->add_option("--format", c.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--parallelism", c.parallelism, "enumeration workers")
        ->check(CLI::Range(1u, 1024u));
    sub->add_option("--capacity", c.capacity, "largest level size before giving up")
        ->check(CLI::PositiveNumber);
  };
  auto max_n = [&](CLI::App* sub) {
    return sub->add_option("--max-n", c.max_n, "largest length")->check(CLI::Range(0, 64));
  };

  auto* count = app.add_subcommand("count", "|Av_n(basis)| for n = 0..max-n");
  common(count, true);
  max_n(count);
  count->add_option("--cache-dir", c.cache_dir, "count cache (default $PERMLAB_CACHE_DIR)");

  auto* enumerate = app.add_subcommand("enumerate", "members of one length");
  common(enumerate, true);
  max_n(enumerate);
  enumerate->add_option("--n", c.n, "length (default max-n)")->check(CLI::Range(0, 64));

  auto* stat = app.add_subcommand("stat", "counts refined by statistics");
  common(stat, true);
  max_n(stat);
  stat->add_option("--stats", c.stats, "leading-maxima, bond, lr-min")->delimiter(',');
  stat->add_option("--filter", c.filter, "restrict the counted permutations");

  auto* simples = app.add_subcommand("simples", "simple members");
  common(simples, true);
  max_n(simples);
  simples->add_option("--n", c.n, "one length only")->check(CLI::Range(0, 64));

  auto* series = app.add_subcommand("series", "coefficients of a named series");
  common(series, false);
  series->add_option("--name", c.name, "series name")->required();
  series->add_option("--order", c.order, "truncation order")->check(CLI::Range(0, 200));
  series->add_option("--mutation", c.mutation)->group("");

  auto* verify = app.add_subcommand("verify", "structural checks and series identities");
  common(verify, false);
  auto* verify_max_n = max_n(verify);
  auto* verify_order = verify->add_option("--order", c.order, "series order")->check(CLI::Range(0, 200));
  verify->add_option("--id", c.id, "one check or identity");
  verify->add_flag("--all", c.all, "everything (the default)");
  verify->add_option("--mutation", c.mutation, "corrupt one formula (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) return cmd_count(c);
    if (*enumerate) return cmd_enumerate(c);
    if (*stat) return cmd_stat(c);
    if (*simples) return cmd_simples(c);
    if (*series) return cmd_series(c);
    if (*verify) return cmd_verify(c, verify_max_n->count() > 0, verify_order->count() > 0);
  } catch (const CapacityError& e) {
    std::cerr << "permlab: " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "permlab: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "permlab: " << e.what() << '\n';
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "permlab: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "permlab: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "permlab: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
