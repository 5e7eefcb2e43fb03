#include "palfact/reconstruct.hpp"

#include <algorithm>
#include <string>

namespace palfact {

namespace {

// Deliberately independent of naive::is_palindrome.
bool reads_same_reversed(std::span<const Symbol> s) {
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

}  // namespace

Factorization factorize(const Text& t, std::span<const PLRecord> records) {
  const Position n = t.size();
  if (records.size() != static_cast<std::size_t>(n) + 1) {
    throw ConsistencyError("expected " + std::to_string(n + 1) + " records, got " +
                           std::to_string(records.size()));
  }
  Factorization f;
  f.parts.reserve(static_cast<std::size_t>(records[static_cast<std::size_t>(n)].pl));
  Position end = n;
  while (end > 0) {
    const Position len = records[static_cast<std::size_t>(end)].last_len;
    if (len < 1 || len > end) {
      throw ConsistencyError("backpointer at " + std::to_string(end) + " has length " +
                             std::to_string(len));
    }
    const Position start = end - len + 1;
    if (!reads_same_reversed(t.slice(start, end))) {
      throw ConsistencyError("backpointer at " + std::to_string(end) + " names non-palindrome [" +
                             std::to_string(start) + ".." + std::to_string(end) + "]");
    }
    f.parts.push_back({start, len});
    end = start - 1;
  }
  std::reverse(f.parts.begin(), f.parts.end());
  return f;
}

bool verify_factorization(const Text& t, const Factorization& f, std::int64_t claimed_pl) {
  if (static_cast<std::int64_t>(f.parts.size()) != claimed_pl) return false;
  Position next = 1;
  for (const Part& p : f.parts) {
    if (p.start != next || p.length < 1 || p.start + p.length - 1 > t.size()) return false;
    const auto all = t.symbols();
    if (!reads_same_reversed(all.subspan(static_cast<std::size_t>(p.start - 1),
                                         static_cast<std::size_t>(p.length)))) {
      return false;
    }
    next = p.start + p.length;
  }
  return next == t.size() + 1;
}

}  // namespace palfact
