#pragma once

// O(n log n) time, O(n) space palindromic length, usable online.

#include <cstdint>
#include <vector>

#include "palfact/core.hpp"
#include "palfact/gaplist.hpp"

namespace palfact {

#ifdef NDEBUG
inline constexpr bool kShadowCheckDefault = false;
#else
inline constexpr bool kShadowCheckDefault = true;
#endif

struct SessionOptions {
  /// Verify on every GPL read that the slot was last written exactly `gap`
  /// rounds earlier by a triple with the same gap. Throws ConsistencyError
  /// otherwise.
  bool shadow_check = kShadowCheckDefault;
  /// Expected input length; only used to pre-size arrays.
  std::size_t reserve = 0;
};

/// Single-owner online factorization session. Push symbols one at a time;
/// after each push the palindromic length of the text so far is available.
class Session {
 public:
  explicit Session(SessionOptions options = {});

  /// Appends `c` and returns PL of the extended text. O(log j) work.
  std::int64_t push(Symbol c);

  /// PL of the text consumed so far (0 when empty).
  std::int64_t pl() const { return records_.back().pl; }

  Position size() const { return text_.size(); }
  const Text& text() const { return text_; }
  const GapList& gap_list() const { return gaps_; }

  /// records()[j] for j = 0..size().
  const std::vector<PLRecord>& records() const { return records_; }

  /// Triples visited by gap-list updates and PL steps so far.
  std::uint64_t triples_processed() const { return updater_.triples_visited() + step_visits_; }

  /// Number of GPL reads verified by the shadow check.
  std::uint64_t shadow_checks() const { return shadow_checks_; }

  std::vector<PLRecord> take_records() && { return std::move(records_); }

 private:
  PLRecord step(Position j);

  SessionOptions options_;
  Text text_;
  GapList gaps_;
  gaplist::Updater updater_;
  std::vector<PLRecord> records_;
  std::vector<GPLSlot> gpl_;  // index = position, slot 0 unused
  std::uint64_t step_visits_ = 0;
  std::uint64_t shadow_checks_ = 0;
};

/// Batch form: records[j] for j = 0..t.size().
std::vector<PLRecord> pl_fast(const Text& t, SessionOptions options = {});

/// Online push; returns the palindromic length of the extended text.
inline std::int64_t online_push(Session& state, Symbol c) { return state.push(c); }

}  // namespace palfact
