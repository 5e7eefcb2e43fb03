#pragma once

// Shared domain types for palindromic factorization.
//
// All public positions are 1-based: a text of length n has positions 1..n,
// and prefix-indexed arrays (PL records) run over 0..n.

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace palfact {

/// Opaque symbol token. Bytes map to 0..255; Zimin words use small integers.
/// Algorithms only compare symbols for equality.
using Symbol = std::uint64_t;

/// Signed so that the gap-list update can use r = -j as its start value.
using Position = std::int64_t;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A caller broke a precondition (e.g. fed a gap list from the wrong round).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Internal invariant violated. Never expected; raised by runtime tripwires.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sequence of symbols addressed by 1-based positions.
class Text {
 public:
  Text() = default;
  explicit Text(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  static Text from_bytes(std::string_view bytes);

  Position size() const { return static_cast<Position>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }

  /// Unchecked 1-based access.
  Symbol operator[](Position p) const { return symbols_[static_cast<std::size_t>(p - 1)]; }

  /// Checked 1-based access; throws RangeError.
  Symbol at(Position p) const;

  void push_back(Symbol s) { symbols_.push_back(s); }
  void reserve(std::size_t n) { symbols_.reserve(n); }

  /// Text[1..len].
  Text prefix(Position len) const;

  /// Text[from..to] in 0-based storage order, for printing.
  std::span<const Symbol> slice(Position from, Position to) const;

  std::span<const Symbol> symbols() const { return symbols_; }

  friend bool operator==(const Text&, const Text&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// Arithmetic progression start, start+gap, ..., start+(count-1)*gap of
/// palindromic-suffix start positions sharing the same preceding gap.
///
/// The first triple of a gap list has no predecessor; its gap holds an
/// "infinite-class" value start+round, which is larger than any real gap at
/// that round and stays invariant when the triple is shifted by one round.
struct GapTriple {
  Position start = 0;
  std::int64_t gap = 0;
  std::int64_t count = 0;

  Position last() const { return start + (count - 1) * gap; }

  friend bool operator==(const GapTriple&, const GapTriple&) = default;
};

/// True when `gap` is an infinite-class value for a list describing `round`.
inline bool is_infinite_gap(std::int64_t gap, Position round) { return gap > round; }

/// Compact representation of the palindromic suffixes of Text[1..round],
/// triples in decreasing order of gap.
struct GapList {
  std::vector<GapTriple> triples;
  Position round = 0;

  friend bool operator==(const GapList&, const GapList&) = default;
};

/// Palindromic length of a prefix and the length of the last palindrome of
/// one minimum factorization of it (0 for the empty prefix).
struct PLRecord {
  std::int64_t pl = 0;
  std::int64_t last_len = 0;

  friend bool operator==(const PLRecord&, const PLRecord&) = default;
};

/// Memoized partition minimum. The round/gap of the last write are kept so
/// the fast algorithm can check that every read finds the value it expects.
struct GPLSlot {
  static constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::max();

  PLRecord value{kUnset, 0};
  Position written_at_round = 0;
  std::int64_t written_gap = 0;
};

/// All positions encoded by `g`, ascending. Throws ValidationError on a
/// triple with count < 1 or a non-positive decoded position.
std::vector<Position> decode_gap_list(const GapList& g);

struct ValidationReport {
  bool ok = true;
  std::string violation;  // first violation found, empty when ok

  explicit operator bool() const { return ok; }
};

/// Checks `g` against the palindromic suffixes of t[1..g.round], computed
/// naively: strictly decreasing gaps, an infinite-class first triple of
/// count 1, and an exact decoded-set match.
ValidationReport validate_gap_list(const GapList& g, const Text& t);

}  // namespace palfact
