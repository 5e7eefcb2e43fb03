#include "palfact/naive.hpp"

#include <string>

namespace palfact {

OracleCapError::OracleCapError(Position n, std::size_t cap)
    : std::length_error("oracle refuses text of length " + std::to_string(n) +
                        ": cap is " + std::to_string(cap)),
      cap_(cap) {}

bool is_palindrome(const Text& t, Position i, Position j) {
  const Position n = t.size();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw RangeError("palindrome query [" + std::to_string(i) + ".." + std::to_string(j) +
                     "] outside text of length " + std::to_string(n));
  }
  while (i < j) {
    if (t[i] != t[j]) return false;
    ++i;
    --j;
  }
  return true;
}

std::vector<Position> suffix_palindrome_starts(const Text& t, Position j) {
  if (j < 1 || j > t.size()) {
    throw RangeError("round " + std::to_string(j) + " outside 1.." + std::to_string(t.size()));
  }
  std::vector<Position> starts;
  for (Position i = 1; i <= j; ++i) {
    if (is_palindrome(t, i, j)) starts.push_back(i);
  }
  return starts;
}

std::vector<PLRecord> pl_quadratic(const Text& t) {
  QuadraticStats ignored;
  return pl_quadratic(t, ignored);
}

std::vector<PLRecord> pl_quadratic(const Text& t, QuadraticStats& stats) {
  const Position n = t.size();
  std::vector<PLRecord> pl(static_cast<std::size_t>(n) + 1);
  std::vector<Position> starts;  // P, ascending
  std::vector<Position> next;
  stats.elements_processed = 0;
  stats.set_sizes.clear();
  if (stats.record_set_sizes) stats.set_sizes.reserve(static_cast<std::size_t>(n));

  for (Position j = 1; j <= n; ++j) {
    next.clear();
    for (Position i : starts) {
      if (i > 1 && t[i - 1] == t[j]) next.push_back(i - 1);
    }
    if (j > 1 && t[j - 1] == t[j]) next.push_back(j - 1);
    next.push_back(j);
    starts.swap(next);

    PLRecord best{j, 1};
    for (Position i : starts) {
      const std::int64_t candidate = pl[static_cast<std::size_t>(i - 1)].pl + 1;
      if (candidate < best.pl) best = {candidate, j - i + 1};
    }
    stats.elements_processed += starts.size();
    if (stats.record_set_sizes) stats.set_sizes.push_back(starts.size());
    pl[static_cast<std::size_t>(j)] = best;
  }
  return pl;
}

std::vector<PLRecord> pl_oracle(const Text& t, std::size_t cap) {
  const Position n = t.size();
  if (static_cast<std::size_t>(n) > cap) throw OracleCapError(n, cap);

  // pal[i][j] for 0-based i <= j, filled by increasing length.
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<bool>> pal(un, std::vector<bool>(un, false));
  for (std::size_t len = 1; len <= un; ++len) {
    for (std::size_t i = 0; i + len <= un; ++i) {
      const std::size_t j = i + len - 1;
      const auto si = t.symbols()[i];
      const auto sj = t.symbols()[j];
      pal[i][j] = si == sj && (len <= 2 || pal[i + 1][j - 1]);
    }
  }

  std::vector<PLRecord> pl(un + 1);
  for (std::size_t j = 1; j <= un; ++j) {
    PLRecord best{static_cast<std::int64_t>(j) + 1, 0};
    for (std::size_t i = 1; i <= j; ++i) {
      if (!pal[i - 1][j - 1]) continue;
      const std::int64_t candidate = pl[i - 1].pl + 1;
      if (candidate < best.pl) best = {candidate, static_cast<std::int64_t>(j - i + 1)};
    }
    pl[j] = best;
  }
  return pl;
}

}  // namespace palfact
