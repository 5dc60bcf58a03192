#pragma once

// Exhaustive element-wise checks of the structural claims about the
// Schröder classes C(τ) = Av(2143, 3142, τ), with counterexample reporting.
//
// Each check enumerates the classes it needs up to max_n, compares them with
// an independent construction or characterization, and returns witnesses for
// every disagreement, shortest first.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/enumeration.hpp"
#include "permlab/pattern.hpp"
#include "permlab/series_lab.hpp"

namespace permlab {

struct Witness {
  Permutation perm;  // empty when the failure is not about one permutation
  std::string reason;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  std::string check_id;
  int max_n = 0;
  bool pass = true;
  std::vector<Witness> witnesses;
  long long elapsed_millis = 0;

  /// {checkId, maxN, status, witnesses: [{perm, reason}], elapsedMillis}
  std::string to_json() const;
};

struct CheckInfo {
  std::string id;
  int default_max_n;
  std::string summary;
};

enum class CaseId { no_gap, one_gap, multi_gap };
std::string_view case_id(CaseId c);

struct Generated {
  Permutation perm;
  CaseId tag;
};

/// Members of C(254613) of length <= max_n built from smaller members:
/// identities; (1 ⊖ᵢ β) ⊕ 1…m; and the two ways of adding a horizontal gap.
/// `cls` must hold levels 0..max_n of the class.
std::vector<Generated> reconstruct_254613(const ClassLevels& cls, int max_n);
/// C(524361): C(4132), the one-gap form (1 ⊖ᵢ β) ⊕ 1…m and the multi-gap
/// form ((α ⊕ 1) ⊖ᵢ β) ⊕ 1…m with α ∈ C(4132), α₁ ≠ 1, and the part of β
/// after its first i entries containing 132.
std::vector<Generated> reconstruct_524361(const ClassLevels& c4132, const ClassLevels& cls,
                                          int max_n);
/// C(546132): C(4132), the one-gap form, and σ ∈ 𝒜 with σ_ℓ inflated by a
/// one-gap block (1 ⊖ᵢ β) ⊕ 1…m, m >= 1.
std::vector<Generated> reconstruct_546132(const ClassLevels& c4132, const ClassLevels& cls,
                                          int max_n);

/// 𝒜: nonempty σ with σ_ℓ − 1 ≠ σ_{ℓ−1}, where σ₀ = 0.
bool in_set_A(PermView sigma);
/// ℬ: nonempty σ with σ₁ ≠ 1.
bool in_set_B(PermView sigma);
/// Moves the identity prefix 1…i of σ ∈ 𝒜 so that it sits immediately
/// before and below σ_ℓ. Throws PreconditionError when 0 < i and i >= ℓ.
Permutation a_to_b(PermView sigma);

/// 1-based positions of a simple σ that only admit increasing blocks: those
/// before ℓ, and those after ℓ that are not LR-minima of σ_{ℓ+1}…σ_n.
std::vector<int> constrained_positions(PermView sigma);

/// {2143, 3142, 245613}; not Wilf-equivalent to the Schröder classes.
PatternBasis negative_control_basis();

class Verifier {
 public:
  explicit Verifier(std::shared_ptr<ClassStore> store = std::make_shared<ClassStore>(),
                    Mutation mutation = Mutation::none);

  static const std::vector<CheckInfo>& checks();
  static bool is_check(std::string_view id);

  /// Throws ConfigError for an unknown id.
  VerificationReport run(std::string_view id, int max_n);
  /// A series identity as a report; a mismatch becomes a witness without a
  /// permutation.
  VerificationReport run_identity(std::string_view id, int order);
  /// Every structural check at max_n, then every identity at `order`
  /// (enumeration-backed identities at most at kMaxEnumerationOrder).
  std::vector<VerificationReport> run_all(int max_n, int order);

  /// |Av_n(basis)| against the large Schröder numbers for n <= max_n.
  VerificationReport cross_count(const std::vector<PatternBasis>& bases, int max_n,
                                 std::string id = "cross-count");

 private:
  std::shared_ptr<const ClassLevels> levels(const PatternBasis& basis, int max_n);

  std::vector<Witness> lemma2(int max_n);
  std::vector<Witness> staircase(int max_n);
  std::vector<Witness> char_4132(int max_n);
  std::vector<Witness> case_partition_254613(int max_n);
  std::vector<Witness> decomp(std::string_view tau, int max_n);
  std::vector<Witness> bijection_a_b(int max_n);
  std::vector<Witness> simples_coincide(int max_n);
  std::vector<Witness> t_characterization(int max_n);
  std::vector<Witness> inflation_rules(int max_n);
  std::vector<Witness> deflation_uniqueness(int max_n);
  std::vector<Witness> extraction_closure(int max_n);
  std::vector<Witness> a033321_count(int max_n);
  std::vector<Witness> negative_control(int max_n);

  std::shared_ptr<ClassStore> store_;
  SeriesLab lab_;
};

}  // namespace permlab
