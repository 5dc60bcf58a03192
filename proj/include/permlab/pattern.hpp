#pragma once

// Exact pattern containment and normalized pattern bases.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

/// A pattern preprocessed for depth-first occurrence search.
///
/// Pattern entries are matched left to right. For each pattern index j the
/// nearest earlier entries just below and just above pattern[j] in value are
/// precomputed; a host entry is a valid image of j iff its value lies strictly
/// between the images of those two neighbours. That is enough to guarantee an
/// order-isomorphic subsequence.
class CompiledPattern {
 public:
  explicit CompiledPattern(Permutation pattern);

  const Permutation& pattern() const noexcept { return pattern_; }
  std::size_t size() const noexcept { return pattern_.size(); }

  bool occurs_in(PermView host) const;

  /// Occurrence search restricted to occurrences that use host position
  /// `pos` (0-based), which must hold the maximum of `host`. When `host` was
  /// obtained by inserting its maximum into a pattern-avoiding parent, this
  /// is equivalent to occurs_in.
  bool occurs_through_max(PermView host, std::size_t pos) const;

 private:
  bool search(PermView host, std::size_t j, std::size_t start,
              std::size_t pinned_index, std::size_t pinned_pos,
              std::vector<std::size_t>& chosen) const;

  Permutation pattern_;
  std::vector<int> lower_;  // index of nearest smaller earlier entry, or -1
  std::vector<int> upper_;  // index of nearest larger earlier entry, or -1
  std::size_t max_index_ = 0;
};

bool contains(PermView host, PermView pattern);

/// Normalized finite set of patterns: duplicates removed, patterns that
/// contain another member dropped, sorted by (length, lexicographic).
class PatternBasis {
 public:
  PatternBasis() = default;
  explicit PatternBasis(std::vector<Permutation> patterns);
  PatternBasis(std::initializer_list<std::string_view> patterns);

  const std::vector<Permutation>& patterns() const noexcept {
    return patterns_;
  }
  const std::vector<CompiledPattern>& compiled() const noexcept {
    return compiled_;
  }
  bool empty() const noexcept { return patterns_.empty(); }
  std::size_t size() const noexcept { return patterns_.size(); }

  /// Canonical text: patterns in canonical order joined with ','
  /// (';' when some pattern is longer than 9).
  std::string to_string() const;
  /// FNV-1a of to_string(), as 16 hex digits.
  std::string hash() const;

  friend bool operator==(const PatternBasis& a, const PatternBasis& b) {
    return a.patterns_ == b.patterns_;
  }

 private:
  std::vector<Permutation> patterns_;
  std::vector<CompiledPattern> compiled_;
};

/// Parses a basis. Patterns are separated by ';' or whitespace; when neither
/// appears, ',' separates digit-string patterns ("2143,3142,254613").
/// Throws ParseError.
PatternBasis parse_basis(std::string_view text);

bool avoids_all(PermView host, const PatternBasis& basis);

/// {2143, 3142, τ}.
PatternBasis egge_basis(std::string_view tau);

}  // namespace permlab
