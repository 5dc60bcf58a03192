#pragma once

// Permutations in one-line notation and the pure operations the rest of the
// library is built on: statistics, sums, extraction, standardization.
//
// Positions reported through IndexSet and Interval are 1-based, matching the
// usual mathematical convention; element access through operator[] is
// 0-based like any other container.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/errors.hpp"

namespace permlab {

/// Entry type. Permutations longer than 255 are rejected at construction.
using Value = std::uint8_t;

inline constexpr std::size_t kMaxLength = 255;

using PermView = std::span<const Value>;

class Permutation {
 public:
  Permutation() = default;

  /// Validates that `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<Value> values);
  Permutation(std::initializer_list<int> values);

  /// Adopts `values` without validation; callers guarantee bijectivity.
  static Permutation from_trusted(std::vector<Value> values) noexcept {
    Permutation p;
    p.values_ = std::move(values);
    return p;
  }
  static Permutation from_view(PermView view) {
    return from_trusted(std::vector<Value>(view.begin(), view.end()));
  }

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  Value operator[](std::size_t i) const noexcept { return values_[i]; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }
  const std::vector<Value>& values() const noexcept { return values_; }
  PermView view() const noexcept { return values_; }
  operator PermView() const noexcept { return values_; }

  /// Digit string for n <= 9, comma-separated integers otherwise, "" for ∅.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<Value> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Strictly increasing 1-based positions.
using IndexSet = std::vector<int>;

/// Accepts "2413", "2,4,1,3" or "" (the empty permutation).
/// Throws ParseError naming the offending token.
Permutation parse_permutation(std::string_view text);

/// Order-isomorphic relabelling of arbitrary distinct integers onto 1..k.
template <class T>
Permutation standardize(std::span<const T> seq);
Permutation standardize(PermView seq);

IndexSet lr_maxima(PermView p);
IndexSet lr_minima(PermView p);
int leading_maxima_count(PermView p);
IndexSet horizontal_gaps(PermView p);
int lr_minima_count(PermView p);
int bond_count(PermView p);

Permutation direct_sum(PermView a, PermView b);
Permutation skew_sum(PermView a, PermView b);

/// α⊖ᵢβ: the skew sum with the first i entries of β (its first i leading
/// maxima) moved in front of α; values are unchanged. Requires
/// 0 <= i <= ℓ(β); throws PreconditionError otherwise.
Permutation extraction(PermView alpha, PermView beta, int i);

/// Deletes positions 1..ℓ(π) and standardizes what is left.
Permutation strip_leading_maxima(PermView p);
/// Deletes every LR-maximum and standardizes what is left.
Permutation delete_lr_maxima(PermView p);

bool is_identity(PermView p);
bool is_sum_decomposable(PermView p);
bool is_skew_decomposable(PermView p);

// ---------------------------------------------------------------------------

template <class T>
Permutation standardize(std::span<const T> seq) {
  std::vector<std::size_t> order(seq.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
  std::vector<Value> out(seq.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    out[order[rank]] = static_cast<Value>(rank + 1);
  return Permutation::from_trusted(std::move(out));
}

}  // namespace permlab
