#include "palfact/fast.hpp"

#include <string>

namespace palfact {

Session::Session(SessionOptions options) : options_(options), records_(1) {
  if (options_.reserve > 0) {
    text_.reserve(options_.reserve);
    records_.reserve(options_.reserve + 1);
    gpl_.reserve(options_.reserve + 1);
  }
  gpl_.emplace_back();
}

std::int64_t Session::push(Symbol c) {
  text_.push_back(c);
  const Position j = text_.size();
  gpl_.emplace_back();
  updater_.advance(gaps_, text_, j);
  records_.push_back(step(j));
  return records_.back().pl;
}

PLRecord Session::step(Position j) {
  PLRecord best{j, 1};
  for (const GapTriple& tr : gaps_.triples) {
    const Position longest_free = tr.last();  // the one start not shared with round j - gap
    PLRecord m{records_[static_cast<std::size_t>(longest_free - 1)].pl + 1, j - longest_free + 1};

    if (tr.count > 1) {
      const Position slot_index = tr.start - tr.gap;
      if (slot_index < 1) {
        throw ConsistencyError("GPL read below position 1 at round " + std::to_string(j));
      }
      const GPLSlot& slot = gpl_[static_cast<std::size_t>(slot_index)];
      if (options_.shadow_check) {
        ++shadow_checks_;
        if (slot.written_at_round != j - tr.gap || slot.written_gap != tr.gap) {
          throw ConsistencyError(
              "GPL[" + std::to_string(slot_index) + "] read at round " + std::to_string(j) +
              " with gap " + std::to_string(tr.gap) + " was last written at round " +
              std::to_string(slot.written_at_round) + " with gap " +
              std::to_string(slot.written_gap));
        }
      }
      // The stored palindrome ended gap rounds ago at the same start.
      if (slot.value.pl < m.pl) m = {slot.value.pl, slot.value.last_len + tr.gap};
    }

    if (tr.gap <= tr.start) {
      GPLSlot& slot = gpl_[static_cast<std::size_t>(tr.start - tr.gap)];
      slot.value = m;
      slot.written_at_round = j;
      slot.written_gap = tr.gap;
    }
    if (m.pl < best.pl) best = m;
  }
  step_visits_ += gaps_.triples.size();
  return best;
}

std::vector<PLRecord> pl_fast(const Text& t, SessionOptions options) {
  options.reserve = static_cast<std::size_t>(t.size());
  Session session(options);
  for (Symbol c : t.symbols()) session.push(c);
  return std::move(session).take_records();
}

}  // namespace palfact
