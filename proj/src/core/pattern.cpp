#include "permlab/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace permlab {

CompiledPattern::CompiledPattern(Permutation pattern)
    : pattern_(std::move(pattern)),
      lower_(pattern_.size(), -1),
      upper_(pattern_.size(), -1) {
  const std::size_t k = pattern_.size();
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (pattern_[i] < pattern_[j] &&
          (lower_[j] < 0 || pattern_[i] > pattern_[lower_[j]]))
        lower_[j] = static_cast<int>(i);
      if (pattern_[i] > pattern_[j] &&
          (upper_[j] < 0 || pattern_[i] < pattern_[upper_[j]]))
        upper_[j] = static_cast<int>(i);
    }
    if (pattern_[j] == k) max_index_ = j;
  }
}

bool CompiledPattern::search(PermView host, std::size_t j, std::size_t start,
                             std::size_t pinned_index, std::size_t pinned_pos,
                             std::vector<std::size_t>& chosen) const {
  const std::size_t k = pattern_.size();
  if (j == k) return true;
  const int lo = lower_[j] < 0 ? 0 : host[chosen[lower_[j]]];
  const int hi = upper_[j] < 0 ? static_cast<int>(kMaxLength) + 1
                               : host[chosen[upper_[j]]];

  std::size_t first = start;
  std::size_t last = host.size() - (k - j);  // leave room for the rest
  if (j == pinned_index) {
    first = pinned_pos;
    last = std::min(last, pinned_pos);
  } else if (j < pinned_index && pinned_index < k) {
    // positions strictly before the pinned one, leaving room up to it
    if (pinned_pos < pinned_index - j) return false;
    last = std::min(last, pinned_pos - (pinned_index - j));
  }
  for (std::size_t pos = first; pos <= last && pos < host.size(); ++pos) {
    const int v = host[pos];
    if (v <= lo || v >= hi) continue;
    chosen[j] = pos;
    if (search(host, j + 1, pos + 1, pinned_index, pinned_pos, chosen))
      return true;
  }
  return false;
}

bool CompiledPattern::occurs_in(PermView host) const {
  if (pattern_.size() > host.size()) return false;
  if (pattern_.empty()) return true;
  std::vector<std::size_t> chosen(pattern_.size());
  return search(host, 0, 0, pattern_.size(), 0, chosen);
}

bool CompiledPattern::occurs_through_max(PermView host, std::size_t pos) const {
  if (pattern_.size() > host.size()) return false;
  if (pattern_.empty()) return true;
  // The image of the pattern maximum is pinned to pos.
  if (pos < max_index_ || host.size() - pos < pattern_.size() - max_index_)
    return false;
  std::vector<std::size_t> chosen(pattern_.size());
  return search(host, 0, 0, max_index_, pos, chosen);
}

bool contains(PermView host, PermView pattern) {
  return CompiledPattern(Permutation::from_view(pattern)).occurs_in(host);
}

PatternBasis::PatternBasis(std::vector<Permutation> patterns) {
  for (const auto& p : patterns)
    if (p.empty()) throw PreconditionError("basis patterns must be nonempty");
  std::sort(patterns.begin(), patterns.end(),
            [](const Permutation& a, const Permutation& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  for (auto& p : patterns) {
    bool dominated = false;
    for (const auto& kept : compiled_)
      if (kept.occurs_in(p)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    patterns_.push_back(p);
    compiled_.emplace_back(p);
  }
}

PatternBasis::PatternBasis(std::initializer_list<std::string_view> patterns)
    : PatternBasis([&] {
        std::vector<Permutation> parsed;
        for (auto text : patterns) parsed.push_back(parse_permutation(text));
        return parsed;
      }()) {}

std::string PatternBasis::to_string() const {
  bool long_form = false;
  for (const auto& p : patterns_) long_form |= p.size() > 9;
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out += long_form ? ";" : ",";
    out += patterns_[i].to_string();
  }
  return out;
}

std::string PatternBasis::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_string()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PatternBasis parse_basis(std::string_view text) {
  std::vector<std::string_view> tokens;
  const bool separated =
      text.find_first_of("; \t\n") != std::string_view::npos;
  const char* seps = separated ? "; \t\n" : ",";
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find_first_of(seps, start);
    if (end == std::string_view::npos) end = text.size();
    if (end > start) tokens.push_back(text.substr(start, end - start));
    else if (!separated)
      throw ParseError("empty pattern in basis '" + std::string(text) + "'");
    start = end + 1;
  }
  if (tokens.empty()) throw ParseError("empty basis");
  std::vector<Permutation> patterns;
  for (auto token : tokens) {
    if (!separated)
      for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError("bad pattern token '" + std::string(token) +
                           "': expected a digit string");
    Permutation p = parse_permutation(token);
    if (p.empty()) throw ParseError("empty pattern in basis");
    patterns.push_back(std::move(p));
  }
  return PatternBasis(std::move(patterns));
}

bool avoids_all(PermView host, const PatternBasis& basis) {
  for (const auto& p : basis.compiled())
    if (p.occurs_in(host)) return false;
  return true;
}

PatternBasis egge_basis(std::string_view tau) {
  return PatternBasis({"2143", "3142", tau});
}

}  // namespace permlab
