#pragma once

// Exhaustive enumeration of avoidance classes by a generating tree: every
// member of Av_n(B) is obtained exactly once by inserting n into a slot of
// its parent in Av_{n-1}(B), and only occurrences through the inserted
// maximum need to be checked.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "permlab/pattern.hpp"

namespace permlab {

struct EnumerationOptions {
  unsigned workers = 1;
  /// Largest level size allowed before CapacityError is thrown.
  std::size_t capacity = 10'000'000;
};

/// All members of one length, packed contiguously.
class ClassLevel {
 public:
  explicit ClassLevel(int length) : length_(length) {}

  int length() const noexcept { return length_; }
  std::size_t size() const noexcept { return count_; }
  PermView operator[](std::size_t i) const noexcept {
    return PermView(data_).subspan(i * length_, length_);
  }
  void push(PermView p);
  void append(const ClassLevel& other);
  void reserve(std::size_t members) { data_.reserve(members * length_); }

  /// Members as Permutation values, sorted lexicographically.
  std::vector<Permutation> sorted_members() const;

 private:
  int length_;
  std::size_t count_ = 0;
  std::vector<Value> data_;
};

using ClassLevels = std::vector<ClassLevel>;

/// Children of every member of `parents` that avoid `basis`, in parent order
/// and left-to-right slot order. Work is split across options.workers
/// contiguous parent ranges; the concatenated result does not depend on the
/// worker count.
ClassLevel extend_level(const ClassLevel& parents, const PatternBasis& basis,
                        const EnumerationOptions& options = {});

/// Levels 0..max_n of Av(basis).
ClassLevels enumerate_levels(const PatternBasis& basis, int max_n,
                             const EnumerationOptions& options = {});

/// Av_n(basis) in lexicographic order.
std::vector<Permutation> enumerate_class(const PatternBasis& basis, int n,
                                         const EnumerationOptions& options = {});

/// (|Av_0|, ..., |Av_max_n|). The last level is counted without being stored.
std::vector<std::uint64_t> count_class(const PatternBasis& basis, int max_n,
                                       const EnumerationOptions& options = {});

/// Thread-safe memo of enumerated levels, shared by checks that need the
/// same classes. Returned snapshots stay valid while the store grows.
class ClassStore {
 public:
  explicit ClassStore(EnumerationOptions options = {}) : options_(options) {}

  std::shared_ptr<const ClassLevels> levels(const PatternBasis& basis, int max_n);
  const EnumerationOptions& options() const noexcept { return options_; }

 private:
  EnumerationOptions options_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const ClassLevels>> cache_;
};

/// Simple members of Av_n(basis), sorted.
std::vector<Permutation> enumerate_simples(const PatternBasis& basis, int n,
                                           const EnumerationOptions& options = {});

/// The set T of length n: from each α ∈ Av_m(132) with α₁ = m, α_m = m−1,
/// insert leading maxima below rows 2..m−1, at most one per row and exactly
/// one below every row r whose values r−1, r are adjacent in α. Requires
/// n >= 4. Sorted.
std::vector<Permutation> generate_T(int n);

}  // namespace permlab
