#pragma once

// Intervals, simple permutations and the substitution decomposition.

#include <vector>

#include "permlab/permutation.hpp"

namespace permlab {

/// Positions lo..hi (1-based, inclusive) whose values are exactly
/// value_lo..value_hi.
struct Interval {
  int lo = 0;
  int hi = 0;
  int value_lo = 0;
  int value_hi = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// All intervals of length strictly between 1 and n, sorted by (lo, hi).
std::vector<Interval> intervals(PermView p);

/// No nontrivial interval. ∅, 1, 12 and 21 count as simple.
bool is_simple(PermView p);

/// σ[ρ⁽¹⁾,…,ρ⁽ᵏ⁾]. Throws PreconditionError on a block count mismatch or an
/// empty block.
Permutation inflate(PermView skeleton, const std::vector<Permutation>& blocks);

struct Deflation {
  Permutation skeleton;
  std::vector<Permutation> blocks;

  friend bool operator==(const Deflation&, const Deflation&) = default;
};

/// The unique simple skeleton with its blocks. For skeleton 12 (21) the
/// first block is the first sum (skew-sum) component, so it is sum
/// (skew-sum) indecomposable. For |π| = 1 the result is 1[1].
/// Requires |π| >= 1.
Deflation deflate(PermView p);

}  // namespace permlab
