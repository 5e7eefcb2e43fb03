#pragma once

// Round-to-round update of the compact palindromic-suffix representation.
//
// Given G_{j-1} (the triples for Text[1..j-1]), one round produces G_j in
// three stages:
//   extend     shift surviving triples one position left (G'_j);
//   normalize  split off first elements whose predecessor changed and append
//              the length-2 and length-1 palindromes (G''_j);
//   merge      coalesce adjacent triples with equal gap (G_j).
// Each stage touches O(|G_{j-1}|) triples.

#include <cstdint>
#include <span>
#include <vector>

#include "palfact/core.hpp"

namespace palfact::gaplist {

/// Returns G'_j. Throws ContractError if g_prev.round != j - 1 and RangeError
/// if j is outside 1..t.size().
GapList extend(const GapList& g_prev, const Text& t, Position j);

/// Returns G''_j from the extend output of round j.
GapList normalize(const GapList& g_ext, const Text& t, Position j);

/// Returns G_j from G''_j.
GapList merge(const GapList& g_norm);

/// merge(normalize(extend(g_prev, t, j))).
GapList update(const GapList& g_prev, const Text& t, Position j);

// Buffer-reusing stage kernels. Each clears `out` and returns the number of
// input triples it visited.
std::size_t extend_into(std::span<const GapTriple> prev, const Text& t, Position j,
                        std::vector<GapTriple>& out);
std::size_t normalize_into(std::span<const GapTriple> ext, const Text& t, Position j,
                           std::vector<GapTriple>& out);
std::size_t merge_into(std::span<const GapTriple> norm, std::vector<GapTriple>& out);

/// Allocation-free steady-state driver used by the fast algorithm. Keeps
/// scratch buffers across rounds and counts every triple visited.
class Updater {
 public:
  /// Advances `g` from round j-1 to round j in place.
  void advance(GapList& g, const Text& t, Position j);

  std::uint64_t triples_visited() const { return visited_; }

 private:
  std::vector<GapTriple> ext_;
  std::vector<GapTriple> norm_;
  std::uint64_t visited_ = 0;
};

}  // namespace palfact::gaplist
