#include "palfact/core.hpp"

#include <algorithm>
#include <sstream>

#include "palfact/naive.hpp"

namespace palfact {

Text Text::from_bytes(std::string_view bytes) {
  std::vector<Symbol> symbols;
  symbols.reserve(bytes.size());
  for (unsigned char c : bytes) symbols.push_back(c);
  return Text(std::move(symbols));
}

Symbol Text::at(Position p) const {
  if (p < 1 || p > size()) {
    throw RangeError("position " + std::to_string(p) + " outside 1.." + std::to_string(size()));
  }
  return (*this)[p];
}

Text Text::prefix(Position len) const {
  if (len < 0 || len > size()) {
    throw RangeError("prefix length " + std::to_string(len) + " outside 0.." +
                     std::to_string(size()));
  }
  return Text(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + len));
}

std::span<const Symbol> Text::slice(Position from, Position to) const {
  if (from < 1 || to > size() || from > to + 1) {
    throw RangeError("slice [" + std::to_string(from) + ".." + std::to_string(to) +
                     "] outside text of length " + std::to_string(size()));
  }
  return std::span<const Symbol>(symbols_).subspan(static_cast<std::size_t>(from - 1),
                                                   static_cast<std::size_t>(to - from + 1));
}

std::vector<Position> decode_gap_list(const GapList& g) {
  std::vector<Position> out;
  for (const GapTriple& tr : g.triples) {
    if (tr.count < 1) {
      throw ValidationError("triple at start " + std::to_string(tr.start) + " has count " +
                            std::to_string(tr.count));
    }
    if (tr.start < 1 || (tr.count > 1 && tr.gap < 1)) {
      throw ValidationError("triple at start " + std::to_string(tr.start) +
                            " decodes to a non-positive position");
    }
    for (std::int64_t k = 0; k < tr.count; ++k) out.push_back(tr.start + k * tr.gap);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

ValidationReport fail(std::string why) { return ValidationReport{false, std::move(why)}; }

}  // namespace

ValidationReport validate_gap_list(const GapList& g, const Text& t) {
  if (g.round < 0 || g.round > t.size()) {
    return fail("round " + std::to_string(g.round) + " exceeds text length " +
                std::to_string(t.size()));
  }
  if (g.round == 0) {
    return g.triples.empty() ? ValidationReport{} : fail("non-empty list for the empty prefix");
  }
  if (g.triples.empty()) return fail("empty list at round " + std::to_string(g.round));

  const GapTriple& first = g.triples.front();
  if (first.count != 1) {
    return fail("first triple has count " + std::to_string(first.count) + ", expected 1");
  }
  if (!is_infinite_gap(first.gap, g.round)) {
    return fail("first triple gap " + std::to_string(first.gap) + " is not infinite-class");
  }
  for (std::size_t i = 1; i < g.triples.size(); ++i) {
    if (g.triples[i].gap >= g.triples[i - 1].gap) {
      return fail("gaps not strictly decreasing at triple " + std::to_string(i) + " (" +
                  std::to_string(g.triples[i - 1].gap) + " then " +
                  std::to_string(g.triples[i].gap) + ")");
    }
    if (g.triples[i].start - g.triples[i - 1].last() != g.triples[i].gap) {
      return fail("triple " + std::to_string(i) + " does not follow its predecessor by its gap");
    }
  }

  std::vector<Position> decoded;
  try {
    decoded = decode_gap_list(g);
  } catch (const ValidationError& e) {
    return fail(e.what());
  }
  const std::vector<Position> expected = suffix_palindrome_starts(t, g.round);
  if (decoded != expected) {
    return fail("decoded " + join(decoded) + " but suffix palindromes start at " +
                join(expected));
  }
  return {};
}

}  // namespace palfact
