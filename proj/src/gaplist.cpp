#include "palfact/gaplist.hpp"

#include <string>

namespace palfact::gaplist {

namespace {

void check_round(const Text& t, Position j) {
  if (j < 1 || j > t.size()) {
    throw RangeError("round " + std::to_string(j) + " outside 1.." + std::to_string(t.size()));
  }
}

}  // namespace

std::size_t extend_into(std::span<const GapTriple> prev, const Text& t, Position j,
                        std::vector<GapTriple>& out) {
  out.clear();
  const Symbol c = t[j];
  // One comparison per triple suffices: all members of a partition either
  // survive or vanish together.
  for (const GapTriple& tr : prev) {
    if (tr.start > 1 && t[tr.start - 1] == c) out.push_back({tr.start - 1, tr.gap, tr.count});
  }
  return prev.size();
}

std::size_t normalize_into(std::span<const GapTriple> ext, const Text& t, Position j,
                           std::vector<GapTriple>& out) {
  out.clear();
  // r is the largest position emitted so far; -j makes i - r infinite-class.
  Position r = -j;
  for (const GapTriple& tr : ext) {
    if (tr.start - r != tr.gap) {
      out.push_back({tr.start, tr.start - r, 1});
      if (tr.count > 1) out.push_back({tr.start + tr.gap, tr.gap, tr.count - 1});
    } else {
      out.push_back(tr);
    }
    r = tr.last();
  }
  if (j > 1 && t[j - 1] == t[j]) {
    out.push_back({j - 1, j - 1 - r, 1});
    r = j - 1;
  }
  out.push_back({j, j - r, 1});
  return ext.size();
}

std::size_t merge_into(std::span<const GapTriple> norm, std::vector<GapTriple>& out) {
  out.clear();
  if (norm.empty()) return 0;
  GapTriple cur = norm.front();
  for (const GapTriple& tr : norm.subspan(1)) {
    if (tr.gap == cur.gap) {
      cur.count += tr.count;
    } else {
      out.push_back(cur);
      cur = tr;
    }
  }
  out.push_back(cur);
  return norm.size();
}

GapList extend(const GapList& g_prev, const Text& t, Position j) {
  check_round(t, j);
  if (g_prev.round != j - 1) {
    throw ContractError("extend at round " + std::to_string(j) + " given list for round " +
                        std::to_string(g_prev.round));
  }
  GapList out{{}, j};
  extend_into(g_prev.triples, t, j, out.triples);
  return out;
}

GapList normalize(const GapList& g_ext, const Text& t, Position j) {
  check_round(t, j);
  GapList out{{}, j};
  out.triples.reserve(2 * g_ext.triples.size() + 2);
  normalize_into(g_ext.triples, t, j, out.triples);
  return out;
}

GapList merge(const GapList& g_norm) {
  GapList out{{}, g_norm.round};
  merge_into(g_norm.triples, out.triples);
  return out;
}

GapList update(const GapList& g_prev, const Text& t, Position j) {
  return merge(normalize(extend(g_prev, t, j), t, j));
}

void Updater::advance(GapList& g, const Text& t, Position j) {
  if (g.round != j - 1) {
    throw ContractError("advance to round " + std::to_string(j) + " from list for round " +
                        std::to_string(g.round));
  }
  // Every output triple of normalize comes from at most two input triples
  // plus the two tail triples.
  const std::size_t bound = 2 * g.triples.size() + 2;
  if (ext_.capacity() < bound) ext_.reserve(2 * bound);
  if (norm_.capacity() < bound) norm_.reserve(2 * bound);
  if (g.triples.capacity() < bound) g.triples.reserve(2 * bound);

  visited_ += extend_into(g.triples, t, j, ext_);
  visited_ += normalize_into(ext_, t, j, norm_);
  visited_ += merge_into(norm_, g.triples);
  g.round = j;
}

}  // namespace palfact::gaplist
