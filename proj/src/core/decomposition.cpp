#include "permlab/decomposition.hpp"

#include <algorithm>

namespace permlab {

std::vector<Interval> intervals(PermView p) {
  std::vector<Interval> out;
  const std::size_t n = p.size();
  for (std::size_t lo = 0; lo < n; ++lo) {
    int mn = p[lo];
    int mx = p[lo];
    for (std::size_t hi = lo + 1; hi < n; ++hi) {
      mn = std::min<int>(mn, p[hi]);
      mx = std::max<int>(mx, p[hi]);
      const std::size_t len = hi - lo + 1;
      if (len >= n) break;
      if (static_cast<std::size_t>(mx - mn) == hi - lo)
        out.push_back({static_cast<int>(lo + 1), static_cast<int>(hi + 1), mn, mx});
    }
  }
  return out;
}

bool is_simple(PermView p) {
  const std::size_t n = p.size();
  for (std::size_t lo = 0; lo < n; ++lo) {
    int mn = p[lo];
    int mx = p[lo];
    for (std::size_t hi = lo + 1; hi < n && hi - lo + 1 < n; ++hi) {
      mn = std::min<int>(mn, p[hi]);
      mx = std::max<int>(mx, p[hi]);
      if (static_cast<std::size_t>(mx - mn) == hi - lo) return false;
    }
  }
  return true;
}

Permutation inflate(PermView skeleton, const std::vector<Permutation>& blocks) {
  if (blocks.size() != skeleton.size())
    throw PreconditionError("inflation needs one block per skeleton entry");
  const std::size_t k = skeleton.size();
  // offset[v] = number of entries in blocks whose skeleton value is below v
  std::vector<std::size_t> size_by_value(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (blocks[i].empty()) throw PreconditionError("inflation block is empty");
    size_by_value[skeleton[i]] = blocks[i].size();
  }
  std::vector<std::size_t> offset(k + 2, 0);
  for (std::size_t v = 1; v <= k; ++v) offset[v + 1] = offset[v] + size_by_value[v];
  if (offset[k + 1] > kMaxLength) throw PreconditionError("inflation too long");
  std::vector<Value> out;
  out.reserve(offset[k + 1]);
  for (std::size_t i = 0; i < k; ++i)
    for (Value v : blocks[i])
      out.push_back(static_cast<Value>(v + offset[skeleton[i]]));
  return Permutation::from_trusted(std::move(out));
}

namespace {

Deflation split_two(PermView p, std::size_t cut, bool sum) {
  Deflation d;
  d.skeleton = sum ? Permutation{1, 2} : Permutation{2, 1};
  d.blocks.push_back(standardize(p.first(cut)));
  d.blocks.push_back(standardize(p.subspan(cut)));
  return d;
}

}  // namespace

Deflation deflate(PermView p) {
  const std::size_t n = p.size();
  if (n == 0) throw PreconditionError("cannot deflate the empty permutation");
  if (n == 1) return {Permutation{1}, {Permutation{1}}};

  // First sum component: shortest proper prefix holding values 1..k.
  int best = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    best = std::max<int>(best, p[i]);
    if (best == static_cast<int>(i + 1)) return split_two(p, i + 1, true);
  }
  int lowest = static_cast<int>(n) + 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    lowest = std::min<int>(lowest, p[i]);
    if (lowest == static_cast<int>(n - i)) return split_two(p, i + 1, false);
  }

  // Neither decomposable: maximal proper intervals partition the positions
  // and the block starting at a position is the longest proper interval
  // starting there.
  std::vector<std::size_t> starts;
  std::size_t lo = 0;
  while (lo < n) {
    std::size_t end = lo;
    int mn = p[lo];
    int mx = p[lo];
    for (std::size_t hi = lo + 1; hi < n && hi - lo + 1 < n; ++hi) {
      mn = std::min<int>(mn, p[hi]);
      mx = std::max<int>(mx, p[hi]);
      if (static_cast<std::size_t>(mx - mn) == hi - lo) end = hi;
    }
    starts.push_back(lo);
    lo = end + 1;
  }
  Deflation d;
  std::vector<Value> reps;
  for (std::size_t b = 0; b < starts.size(); ++b) {
    const std::size_t from = starts[b];
    const std::size_t to = b + 1 < starts.size() ? starts[b + 1] : n;
    reps.push_back(p[from]);
    d.blocks.push_back(standardize(p.subspan(from, to - from)));
  }
  d.skeleton = standardize(PermView(reps));
  return d;
}

}  // namespace permlab
