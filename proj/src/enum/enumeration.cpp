#include "permlab/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "permlab/decomposition.hpp"

namespace permlab {

void ClassLevel::push(PermView p) {
  data_.insert(data_.end(), p.begin(), p.end());
  ++count_;
}

void ClassLevel::append(const ClassLevel& other) {
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  count_ += other.count_;
}

std::vector<Permutation> ClassLevel::sorted_members() const {
  std::vector<Permutation> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back(Permutation::from_view((*this)[i]));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Calls emit(child) for every avoiding child of parents[from, to); a false
// return stops the walk.
template <class Emit>
void for_each_child(const ClassLevel& parents, std::size_t from, std::size_t to,
                    const PatternBasis& basis, Emit&& emit) {
  const int n = parents.length() + 1;
  std::vector<const CompiledPattern*> active;
  for (const auto& p : basis.compiled())
    if (static_cast<int>(p.size()) <= n) active.push_back(&p);
  std::vector<Value> child(n);
  for (std::size_t idx = from; idx < to; ++idx) {
    PermView parent = parents[idx];
    for (int slot = 0; slot < n; ++slot) {
      std::copy(parent.begin(), parent.begin() + slot, child.begin());
      child[slot] = static_cast<Value>(n);
      std::copy(parent.begin() + slot, parent.end(), child.begin() + slot + 1);
      bool ok = true;
      for (const auto* p : active)
        if (p->occurs_through_max(child, static_cast<std::size_t>(slot))) {
          ok = false;
          break;
        }
      if (ok && !emit(PermView(child))) return;
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> split(std::size_t total, unsigned workers) {
  workers = std::max(1u, workers);
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  const std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t from = 0; from < total; from += chunk)
    ranges.emplace_back(from, std::min(total, from + chunk));
  if (ranges.empty()) ranges.emplace_back(0, 0);
  return ranges;
}

}  // namespace

ClassLevel extend_level(const ClassLevel& parents, const PatternBasis& basis,
                        const EnumerationOptions& options) {
  const int n = parents.length() + 1;
  if (n > static_cast<int>(kMaxLength)) throw CapacityError(n, 0);
  const auto ranges = split(parents.size(), options.workers);
  std::vector<ClassLevel> parts(ranges.size(), ClassLevel(n));
  std::vector<char> overflow(ranges.size(), 0);

  auto work = [&](std::size_t r) {
    ClassLevel& out = parts[r];
    for_each_child(parents, ranges[r].first, ranges[r].second, basis, [&](PermView c) {
      if (out.size() >= options.capacity) {
        overflow[r] = 1;
        return false;
      }
      out.push(c);
      return true;
    });
  };
  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t r = 0; r < ranges.size(); ++r) threads.emplace_back(work, r);
    for (auto& t : threads) t.join();
  }

  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  if (total > options.capacity ||
      std::any_of(overflow.begin(), overflow.end(), [](char c) { return c; }))
    throw CapacityError(n, total);
  ClassLevel level(n);
  level.reserve(total);
  for (const auto& part : parts) level.append(part);
  return level;
}

ClassLevels enumerate_levels(const PatternBasis& basis, int max_n,
                             const EnumerationOptions& options) {
  if (basis.empty()) throw PreconditionError("class enumeration needs a nonempty basis");
  ClassLevels levels;
  if (max_n < 0) return levels;
  levels.emplace_back(0);
  levels.back().push({});
  for (int n = 1; n <= max_n; ++n) levels.push_back(extend_level(levels.back(), basis, options));
  return levels;
}

std::vector<Permutation> enumerate_class(const PatternBasis& basis, int n,
                                         const EnumerationOptions& options) {
  if (n < 0) return {};
  return enumerate_levels(basis, n, options).back().sorted_members();
}

std::vector<std::uint64_t> count_class(const PatternBasis& basis, int max_n,
                                       const EnumerationOptions& options) {
  if (max_n < 0) return {};
  if (basis.empty()) throw PreconditionError("class enumeration needs a nonempty basis");
  std::vector<std::uint64_t> counts{1};
  if (max_n == 0) return counts;
  ClassLevel last(0);
  last.push({});
  for (int n = 1; n < max_n; ++n) {
    last = extend_level(last, basis, options);
    counts.push_back(last.size());
  }

  const auto ranges = split(last.size(), options.workers);
  std::vector<std::uint64_t> partial(ranges.size(), 0);
  auto work = [&](std::size_t r) {
    for_each_child(last, ranges[r].first, ranges[r].second, basis, [&](PermView) {
      ++partial[r];
      return true;
    });
  };
  if (ranges.size() == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t r = 0; r < ranges.size(); ++r) threads.emplace_back(work, r);
    for (auto& t : threads) t.join();
  }
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  counts.push_back(total);
  return counts;
}

std::shared_ptr<const ClassLevels> ClassStore::levels(const PatternBasis& basis, int max_n) {
  std::lock_guard lock(mutex_);
  auto& slot = cache_[basis.to_string()];
  if (slot && static_cast<int>(slot->size()) > max_n) return slot;
  ClassLevels grown;
  if (slot) {
    grown = *slot;
  } else {
    grown = enumerate_levels(basis, 0, options_);
  }
  while (static_cast<int>(grown.size()) <= max_n)
    grown.push_back(extend_level(grown.back(), basis, options_));
  slot = std::make_shared<const ClassLevels>(std::move(grown));
  return slot;
}

std::vector<Permutation> enumerate_simples(const PatternBasis& basis, int n,
                                           const EnumerationOptions& options) {
  std::vector<Permutation> out;
  if (n < 0) return out;
  const ClassLevels levels = enumerate_levels(basis, n, options);
  const ClassLevel& level = levels.back();
  for (std::size_t i = 0; i < level.size(); ++i)
    if (is_simple(level[i])) out.push_back(Permutation::from_view(level[i]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> generate_T(int n) {
  if (n < 4) throw PreconditionError("T is empty below length 4");
  const ClassLevels av132 = enumerate_levels(PatternBasis({"132"}), n - 1);
  std::vector<Permutation> out;
  for (int m = 3; m < n; ++m) {
    const int insertions = n - m;
    const ClassLevel& level = av132[m];
    for (std::size_t idx = 0; idx < level.size(); ++idx) {
      PermView alpha = level[idx];
      if (alpha[0] != m || alpha[m - 1] != m - 1) continue;
      // position of each value, to detect bonded rows
      std::vector<int> where(m + 1);
      for (int i = 0; i < m; ++i) where[alpha[i]] = i;
      std::vector<int> forced;
      std::vector<int> optional;
      for (int row = 2; row <= m - 1; ++row) {
        if (std::abs(where[row] - where[row - 1]) == 1)
          forced.push_back(row);
        else
          optional.push_back(row);
      }
      const int extra = insertions - static_cast<int>(forced.size());
      if (extra < 0 || extra > static_cast<int>(optional.size())) continue;

      // every subset of `optional` of size `extra`
      std::vector<bool> pick(optional.size(), false);
      std::fill(pick.end() - extra, pick.end(), true);
      do {
        std::vector<bool> inserted_below(m + 1, false);
        for (int row : forced) inserted_below[row] = true;
        for (std::size_t k = 0; k < optional.size(); ++k)
          if (pick[k]) inserted_below[optional[k]] = true;
        // shift[v] = number of insertions below rows <= v
        std::vector<int> shift(m + 1, 0);
        for (int v = 1; v <= m; ++v) shift[v] = shift[v - 1] + (inserted_below[v] ? 1 : 0);
        std::vector<Value> sigma;
        sigma.reserve(n);
        for (int row = 2; row <= m - 1; ++row)
          if (inserted_below[row]) sigma.push_back(static_cast<Value>(row + shift[row - 1]));
        for (int i = 0; i < m; ++i)
          sigma.push_back(static_cast<Value>(alpha[i] + shift[alpha[i]]));
        out.push_back(Permutation::from_trusted(std::move(sigma)));
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace permlab
