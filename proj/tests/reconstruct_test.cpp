#include <doctest.h>

#include "oracle.hpp"
#include "palfact/fast.hpp"
#include "palfact/generators.hpp"
#include "palfact/naive.hpp"
#include "palfact/reconstruct.hpp"

using namespace palfact;

namespace {

std::string concat(const Text& t, const Factorization& f) {
  std::string out;
  for (const Part& p : f.parts) {
    for (Symbol c : t.slice(p.start, p.start + p.length - 1)) out += static_cast<char>(c);
  }
  return out;
}

}  // namespace

TEST_CASE("factorize") {
  SUBCASE("three-part witness") {
    const Text t = Text::from_bytes("abbaabaabbba");
    const auto f = factorize(t, pl_fast(t));
    CHECK(f.parts.size() == 3);
    CHECK(concat(t, f) == "abbaabaabbba");
    CHECK(verify_factorization(t, f, 3));
  }
  SUBCASE("single symbol") {
    const Text t = Text::from_bytes("a");
    CHECK(factorize(t, pl_fast(t)).parts == std::vector<Part>{{1, 1}});
  }
  SUBCASE("empty text") {
    const auto f = factorize(Text{}, pl_fast(Text{}));
    CHECK(f.parts.empty());
    CHECK(verify_factorization(Text{}, f, 0));
  }
  SUBCASE("abaab ends in the longest palindrome") {
    const Text t = Text::from_bytes("abaab");
    CHECK(factorize(t, pl_fast(t)).parts == std::vector<Part>{{1, 1}, {2, 4}});
    CHECK(factorize(t, pl_quadratic(t)).parts == std::vector<Part>{{1, 1}, {2, 4}});
  }
}

TEST_CASE("factorize rejects corrupt backpointers") {
  const Text t = Text::from_bytes("abc");
  auto records = pl_fast(t);
  records[3].last_len = 2;  // "bc"
  CHECK_THROWS_AS(factorize(t, records), ConsistencyError);
  records[3].last_len = 9;
  CHECK_THROWS_AS(factorize(t, records), ConsistencyError);
  CHECK_THROWS_AS(factorize(t, std::vector<PLRecord>(2)), ConsistencyError);
}

TEST_CASE("verify_factorization") {
  const Text t = Text::from_bytes("abaab");
  CHECK(verify_factorization(t, {{{1, 1}, {2, 4}}}, 2));        // a|baab
  CHECK_FALSE(verify_factorization(t, {{{1, 3}, {4, 2}}}, 2));  // aba|ab
  CHECK_FALSE(verify_factorization(t, {{{1, 1}, {2, 4}}}, 3));  // wrong count
  CHECK_FALSE(verify_factorization(t, {{{1, 1}, {3, 3}}}, 2));  // gap
  CHECK_FALSE(verify_factorization(t, {{{1, 1}, {2, 3}}}, 2));  // short
  CHECK_FALSE(verify_factorization(t, {{{1, 1}, {2, 5}}}, 2));  // overrun
  CHECK_FALSE(verify_factorization(t, {{{1, 0}, {1, 1}, {2, 4}}}, 3));

  const Text periodic = Text::from_bytes("caaabaaabaaabaaa");
  CHECK(verify_factorization(periodic, factorize(periodic, pl_fast(periodic)), 2));
}

TEST_CASE("random strings: part count equals oracle PL and the checker accepts") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Text t = random_text(1 + seed % 300, 2 + seed % 5, seed);
    const auto expected = pl_oracle(t).back().pl;
    const auto fast = pl_fast(t);
    const auto quad = pl_quadratic(t);
    const auto ff = factorize(t, fast);
    const auto fq = factorize(t, quad);
    REQUIRE(static_cast<std::int64_t>(ff.parts.size()) == expected);
    REQUIRE(fq.parts.size() == ff.parts.size());
    REQUIRE(verify_factorization(t, ff, expected));
    REQUIRE(verify_factorization(t, fq, expected));
  }
}
