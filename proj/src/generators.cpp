#include "palfact/generators.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <random>
#include <stdexcept>

namespace palfact {

Text zimin_prefix(std::uint64_t n) {
  Text t;
  t.reserve(n);
  for (std::uint64_t p = 1; p <= n; ++p) t.push_back(zimin_symbol(p));
  return t;
}

Text random_text(std::uint64_t n, std::uint64_t sigma, std::uint64_t seed) {
  if (sigma < 1) throw std::invalid_argument("alphabet size must be at least 1");
  // std::uniform_int_distribution is implementation-defined, so draw from the
  // raw engine and reject the biased tail instead.
  std::mt19937_64 engine(seed);
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % sigma + 1) % sigma;
  Text t;
  t.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t x = engine();
    while (x > limit) x = engine();
    t.push_back(x % sigma);
  }
  return t;
}

Text repeated_symbol(std::uint64_t n) { return Text(std::vector<Symbol>(n, 0)); }

std::string format_symbols(const Text& t) {
  std::string out;
  for (Symbol s : t.symbols()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s);
  }
  return out;
}

Text parse_symbols(std::string_view s) {
  Text t;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < s.size() && !std::isspace(static_cast<unsigned char>(s[end]))) ++end;
    const std::string_view token = s.substr(i, end - i);
    Symbol value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ValidationError("not a non-negative decimal symbol: '" + std::string(token) + "'");
    }
    t.push_back(value);
    i = end;
  }
  return t;
}

}  // namespace palfact
