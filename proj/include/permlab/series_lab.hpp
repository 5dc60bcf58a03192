#pragma once

// Named generating functions, functional-equation solvers and the registry
// of identities they must satisfy.
//
// Closed forms are transcribed as formulas; enumeration-backed series are
// finite polynomials read off refined class counts. An identity check
// evaluates both sides exactly and reports the first differing monomial.
//
// A Mutation deliberately corrupts one formula so tests can confirm that the
// identity registry notices.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/enumeration.hpp"
#include "permlab/series.hpp"

namespace permlab {

enum class Mutation {
  none,
  a3_third_term_t,          // the A3 multi-gap term regains its factor t
  eq2_drop_correction,      // E forgets to subtract 1/(1-tx)
  cubic_coefficient,        // B^2 + (x-2)B + 2
  little_schroder_denominator,  // divide by 2x instead of 4x
  y_numerator,              // Y numerator loses its -tx
  z_numerator,              // Z numerator uses C* instead of C*-1
  h_term,                   // h's second product uses ux instead of tux
  c3_bond_term,             // C loses the t of utx^2
  s_printed_branch,         // s with the opposite square-root branch
  f_plus_overlap,           // f⊕ subtracts x^2 f instead of x^2 (f+1)
  f_minus,                  // f⊖ = f^2
  s_exponent,               // (1+u)^(n-b) instead of (1+u)^(n-b-1)
  catalan_substitution_sign,  // C(x/(1+tx))
};

const std::vector<Mutation>& all_mutations();
std::string_view mutation_id(Mutation m);
/// Throws ConfigError.
Mutation parse_mutation(std::string_view id);

struct Mismatch {
  Exponent at;
  Rational lhs;
  Rational rhs;
};

struct IdentityCheck {
  std::string id;
  int order = 0;
  bool pass = false;
  std::optional<Mismatch> mismatch;

  /// {"id","order","status","firstMismatch":null|{"exponent":{x,t,u},"lhs","rhs"}}
  std::string to_json() const;
};

struct IdentityInfo {
  std::string id;
  bool enumeration_backed;
  int default_order;
  std::string summary;
};

/// Largest order for enumeration-backed series.
inline constexpr int kMaxEnumerationOrder = 12;

using FixedPointMap = std::function<std::vector<MSeries>(const std::vector<MSeries>&)>;

/// Solves y = map(y) grade by grade starting from the grade-0 values in
/// `initial`. Each pass evaluates the map one grade further and must agree
/// with the previous iterate on the grades already fixed; a final pass at
/// full order must reproduce its input. Throws SeriesError naming `name` when
/// the map fails to contract.
std::vector<MSeries> fixed_point_solve(const FixedPointMap& map, std::vector<MSeries> initial,
                                       int order, std::string_view name);

class SeriesLab {
 public:
  explicit SeriesLab(std::shared_ptr<ClassStore> store = std::make_shared<ClassStore>(),
                     Mutation mutation = Mutation::none);

  static const std::vector<std::string>& series_names();
  static const std::vector<std::string>& fixed_point_ids();
  static const std::vector<IdentityInfo>& identities();

  /// Throws ConfigError for an unknown name and PreconditionError when an
  /// enumeration-backed series is asked for beyond kMaxEnumerationOrder.
  MSeries named(std::string_view name, int order);

  /// Solutions of a registered equation, one series per unknown.
  std::vector<MSeries> fixed_point(std::string_view id, int order);

  /// Throws ConfigError for an unknown id.
  IdentityCheck check(std::string_view id, int order);
  IdentityCheck check(std::string_view id);

  Mutation mutation() const noexcept { return mutation_; }

 private:
  MSeries cached(const std::string& key, int order, const std::function<MSeries()>& build);

  MSeries catalan(int n);
  MSeries large_schroder(int n);
  MSeries little_schroder(int n);
  MSeries c_star(int n);
  MSeries y_closed(int n);
  MSeries z_closed(int n);
  MSeries enum_series(std::string_view which, int n);
  MSeries extraction_d(const MSeries& a, int n);
  MSeries eq2_rhs(const MSeries& a1, int n);
  MSeries eq5_rhs(const MSeries& a, int n, bool third_term_t);
  MSeries y33_rhs(const MSeries& y, int n);
  std::vector<MSeries> hg_rhs(const MSeries& h, const MSeries& g, int n);
  MSeries c3_from(const MSeries& h, int n);
  MSeries s_closed(int n);
  MSeries s_substituted(int n);
  MSeries s_simples(int n);
  MSeries f_rhs(const MSeries& f, const MSeries& s, int n);
  MSeries f_plus_of(const MSeries& f);
  MSeries f_minus_of(const MSeries& f);

  std::shared_ptr<ClassStore> store_;
  Mutation mutation_;
  std::map<std::pair<std::string, int>, MSeries> cache_;
};

}  // namespace permlab
