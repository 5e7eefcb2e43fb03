#pragma once

// Input families for tests and benchmarks.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "palfact/core.hpp"

namespace palfact {

/// Symbol at 1-based position p of the infinite Zimin word 1213121412131215...
/// (one plus the number of trailing zero bits of p).
inline Symbol zimin_symbol(std::uint64_t p) {
  return static_cast<Symbol>(std::countr_zero(p)) + 1;
}

/// First n symbols of the Zimin word.
Text zimin_prefix(std::uint64_t n);

/// Number of 1-bits of n.
inline std::uint64_t bitcount(std::uint64_t n) { return static_cast<std::uint64_t>(std::popcount(n)); }

/// Name of the generator behind random_text, printed in benchmark metadata.
inline constexpr std::string_view kPrngName = "mt19937_64";

/// n i.i.d. uniform symbols from {0..sigma-1}. Bit-reproducible for a given
/// (n, sigma, seed) on every platform. Throws std::invalid_argument if sigma < 1.
Text random_text(std::uint64_t n, std::uint64_t sigma, std::uint64_t seed);

/// a^n with a = 0.
Text repeated_symbol(std::uint64_t n);

/// Space-separated decimal symbols, e.g. "1 2 1 3".
std::string format_symbols(const Text& t);

/// Inverse of format_symbols; any whitespace separates symbols. Throws
/// ValidationError on a token that is not a non-negative decimal integer.
Text parse_symbols(std::string_view s);

}  // namespace palfact
