#pragma once

#include <span>
#include <vector>

#include "palfact/core.hpp"

namespace palfact {

struct Part {
  Position start = 0;
  Position length = 0;

  friend bool operator==(const Part&, const Part&) = default;
};

/// Palindromic parts tiling 1..n left to right.
struct Factorization {
  std::vector<Part> parts;
};

/// Walks last-palindrome backpointers from position n down to 0. `records`
/// must come from pl_fast or pl_quadratic on `t`. Throws ConsistencyError if a
/// backpointer is out of range or names a non-palindrome.
Factorization factorize(const Text& t, std::span<const PLRecord> records);

/// True iff the parts tile t exactly, each part is a palindrome, and there
/// are exactly `claimed_pl` of them. Shares no code with the algorithms.
bool verify_factorization(const Text& t, const Factorization& f, std::int64_t claimed_pl);

}  // namespace palfact
