#include "permlab/permutation.hpp"

#include <charconv>
#include <ostream>

namespace permlab {

namespace {

void validate(const std::vector<Value>& values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (Value v : values) {
    if (v == 0 || v > values.size())
      throw PreconditionError("value " + std::to_string(v) +
                              " outside 1.." + std::to_string(values.size()));
    if (seen[v])
      throw PreconditionError("duplicate value " + std::to_string(v));
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<Value> values) : values_(std::move(values)) {
  validate(values_);
}

Permutation::Permutation(std::initializer_list<int> values) {
  if (values.size() > kMaxLength)
    throw PreconditionError("permutation longer than 255");
  values_.reserve(values.size());
  for (int v : values) {
    if (v <= 0 || v > static_cast<int>(kMaxLength))
      throw PreconditionError("value " + std::to_string(v) + " out of range");
    values_.push_back(static_cast<Value>(v));
  }
  validate(values_);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Value> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Value>(i + 1);
  return from_trusted(std::move(v));
}

std::string Permutation::to_string() const {
  std::string out;
  if (values_.size() <= 9) {
    for (Value v : values_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << (p.empty() ? std::string("∅") : p.to_string());
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> raw;
  auto fail = [](std::string_view token, const std::string& why) -> ParseError {
    return ParseError("bad permutation token '" + std::string(token) + "': " +
                      why);
  };
  if (text.find(',') == std::string_view::npos) {
    if (text.size() > 9) throw fail(text, "digit strings are limited to n <= 9");
    for (char c : text) {
      if (c < '1' || c > '9')
        throw fail(std::string_view(&c, 1), "expected a digit 1-9");
      raw.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view token = text.substr(start, end - start);
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw fail(token, "expected a positive integer");
      if (v <= 0) throw fail(token, "values must be positive");
      raw.push_back(v);
      start = end + 1;
    }
  }
  const int n = static_cast<int>(raw.size());
  if (raw.size() > kMaxLength) throw fail(text, "longer than 255");
  std::vector<bool> seen(raw.size() + 1, false);
  for (int v : raw) {
    if (v > n)
      throw fail(std::to_string(v), "exceeds length " + std::to_string(n));
    if (seen[v]) throw fail(std::to_string(v), "duplicate value");
    seen[v] = true;
  }
  std::vector<Value> values(raw.begin(), raw.end());
  return Permutation::from_trusted(std::move(values));
}

Permutation standardize(PermView seq) { return standardize<Value>(seq); }

IndexSet lr_maxima(PermView p) {
  IndexSet out;
  int best = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > best) {
      best = p[i];
      out.push_back(static_cast<int>(i + 1));
    }
  return out;
}

IndexSet lr_minima(PermView p) {
  IndexSet out;
  int best = static_cast<int>(kMaxLength) + 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < best) {
      best = p[i];
      out.push_back(static_cast<int>(i + 1));
    }
  return out;
}

int lr_minima_count(PermView p) {
  int count = 0;
  int best = static_cast<int>(kMaxLength) + 1;
  for (Value v : p)
    if (v < best) {
      best = v;
      ++count;
    }
  return count;
}

int leading_maxima_count(PermView p) {
  std::size_t i = 0;
  while (i < p.size() && (i == 0 || p[i] > p[i - 1])) ++i;
  return static_cast<int>(i);
}

IndexSet horizontal_gaps(PermView p) {
  IndexSet out;
  int best = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > best) {
      best = p[i];
      if (p[i + 1] < best) out.push_back(static_cast<int>(i + 1));
    }
  }
  return out;
}

int bond_count(PermView p) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] + 1 == p[i + 1] || p[i] == p[i + 1] + 1) ++count;
  return count;
}

Permutation direct_sum(PermView a, PermView b) {
  std::vector<Value> out(a.begin(), a.end());
  out.reserve(a.size() + b.size());
  for (Value v : b) out.push_back(static_cast<Value>(v + a.size()));
  return Permutation::from_trusted(std::move(out));
}

Permutation skew_sum(PermView a, PermView b) {
  std::vector<Value> out;
  out.reserve(a.size() + b.size());
  for (Value v : a) out.push_back(static_cast<Value>(v + b.size()));
  out.insert(out.end(), b.begin(), b.end());
  return Permutation::from_trusted(std::move(out));
}

Permutation extraction(PermView alpha, PermView beta, int i) {
  if (i < 0 || i > leading_maxima_count(beta))
    throw PreconditionError("extraction index " + std::to_string(i) +
                            " outside 0..ℓ(β)");
  std::vector<Value> out;
  out.reserve(alpha.size() + beta.size());
  out.insert(out.end(), beta.begin(), beta.begin() + i);
  for (Value v : alpha) out.push_back(static_cast<Value>(v + beta.size()));
  out.insert(out.end(), beta.begin() + i, beta.end());
  return Permutation::from_trusted(std::move(out));
}

Permutation strip_leading_maxima(PermView p) {
  return standardize(p.subspan(static_cast<std::size_t>(leading_maxima_count(p))));
}

Permutation delete_lr_maxima(PermView p) {
  std::vector<Value> rest;
  int best = 0;
  for (Value v : p) {
    if (v > best)
      best = v;
    else
      rest.push_back(v);
  }
  return standardize(PermView(rest));
}

bool is_identity(PermView p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i + 1) return false;
  return true;
}

bool is_sum_decomposable(PermView p) {
  // A proper prefix whose values are exactly 1..k.
  int best = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    best = std::max<int>(best, p[i]);
    if (best == static_cast<int>(i + 1)) return true;
  }
  return false;
}

bool is_skew_decomposable(PermView p) {
  const int n = static_cast<int>(p.size());
  int lowest = n + 1;
  for (int i = 0; i + 1 < n; ++i) {
    lowest = std::min<int>(lowest, p[i]);
    if (lowest == n - i) return true;
  }
  return false;
}

}  // namespace permlab
