#pragma once

// Reference algorithms: the quadratic incremental algorithm and an
// independent table-based oracle. Both serve as test oracles for the fast path.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "palfact/core.hpp"

namespace palfact {

inline constexpr std::size_t kDefaultOracleCap = 4096;

/// Raised when pl_oracle is asked for a text above its quadratic-memory cap.
class OracleCapError : public std::length_error {
 public:
  OracleCapError(Position n, std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// True iff t[i..j] reads the same both ways. i > j denotes the empty string.
/// Throws RangeError when a position lies outside 1..t.size().
bool is_palindrome(const Text& t, Position i, Position j);

/// Start positions of all palindromes ending at j, ascending (always ends in j).
std::vector<Position> suffix_palindrome_starts(const Text& t, Position j);

/// Quadratic algorithm: maintains the explicit start set P_j round by round.
/// records[j] for j = 0..n. Ties keep the longest palindrome.
std::vector<PLRecord> pl_quadratic(const Text& t);

struct QuadraticStats {
  /// Set elements scanned while taking minima, i.e. the sum over rounds of |P_j|.
  std::uint64_t elements_processed = 0;
  /// When set, receives |P_j| for j = 1..n.
  bool record_set_sizes = false;
  std::vector<std::uint64_t> set_sizes;
};

/// Same, filling in instrumentation counters.
std::vector<PLRecord> pl_quadratic(const Text& t, QuadraticStats& stats);

/// Full palindrome table plus textbook DP. Θ(n²) memory, so it refuses
/// texts longer than `cap` with OracleCapError.
std::vector<PLRecord> pl_oracle(const Text& t, std::size_t cap = kDefaultOracleCap);

}  // namespace palfact
