#include <doctest.h>

#include "oracle.hpp"
#include "palfact/generators.hpp"
#include "palfact/naive.hpp"

using namespace palfact;

namespace {

std::vector<std::int64_t> pls(const std::vector<PLRecord>& records) {
  std::vector<std::int64_t> out;
  for (const auto& r : records) out.push_back(r.pl);
  return out;
}

const std::vector<std::int64_t> kPeriodicPrefixPL = {0, 1, 2, 2, 2, 3, 3, 3, 2, 3, 3, 3, 2, 3, 3, 3, 2};

}  // namespace

TEST_CASE("is_palindrome") {
  CHECK(is_palindrome(Text::from_bytes("abaab"), 1, 3));
  CHECK_FALSE(is_palindrome(Text::from_bytes("abaca"), 1, 5));
  CHECK(is_palindrome(zimin_prefix(10), 6, 10));  // 21412
  CHECK(is_palindrome(Text::from_bytes("ab"), 2, 1));  // empty
  CHECK_THROWS_AS(is_palindrome(Text::from_bytes("ab"), 0, 1), RangeError);
  CHECK_THROWS_AS(is_palindrome(Text::from_bytes("ab"), 1, 3), RangeError);
}

TEST_CASE("suffix_palindrome_starts") {
  CHECK(suffix_palindrome_starts(Text::from_bytes("caaabaaabaaabaaa"), 16) ==
        std::vector<Position>{2, 6, 10, 14, 15, 16});
  CHECK(suffix_palindrome_starts(Text::from_bytes("xyz"), 1) == std::vector<Position>{1});
  CHECK(suffix_palindrome_starts(zimin_prefix(10), 10).size() == 2);  // B(10)
  CHECK_THROWS_AS(suffix_palindrome_starts(Text::from_bytes("ab"), 3), RangeError);
}

TEST_CASE("pl_quadratic") {
  CHECK(pl_quadratic(Text::from_bytes("abaab")).back().pl == 2);
  CHECK(pl_quadratic(Text::from_bytes("abaca")).back().pl == 3);
  CHECK(pl_quadratic(Text::from_bytes("abbaabaabbba")).back().pl == 3);
  CHECK(pls(pl_quadratic(Text::from_bytes("caaabaaabaaabaaa"))) == kPeriodicPrefixPL);

  const auto empty = pl_quadratic(Text{});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == PLRecord{0, 0});
}

TEST_CASE("pl_quadratic keeps the longest palindrome on ties") {
  const auto r = pl_quadratic(Text::from_bytes("aba"));
  CHECK(r[3] == PLRecord{1, 3});
  const auto s = pl_quadratic(Text::from_bytes("abaab"));
  CHECK(s[5] == PLRecord{2, 4});  // a|baab
}

TEST_CASE("quadratic element counter is n(n+1)/2 on a^n") {
  for (std::uint64_t n : {1u, 2u, 17u, 1000u}) {
    QuadraticStats stats;
    pl_quadratic(repeated_symbol(n), stats);
    CHECK(stats.elements_processed == n * (n + 1) / 2);
  }
}

TEST_CASE("pl_oracle") {
  CHECK(pls(pl_oracle(Text::from_bytes("caaabaaabaaabaaa"))) == kPeriodicPrefixPL);
  CHECK(pls(pl_oracle(Text::from_bytes("aaaaa"))) == std::vector<std::int64_t>{0, 1, 1, 1, 1, 1});
  CHECK(pl_oracle(Text{}).size() == 1);

  SUBCASE("refuses texts above the cap") {
    const Text t = repeated_symbol(10);
    CHECK_NOTHROW(pl_oracle(t, 10));
    try {
      pl_oracle(t, 9);
      FAIL("expected refusal");
    } catch (const OracleCapError& e) {
      CHECK(e.cap() == 9);
      CHECK(std::string(e.what()).find("9") != std::string::npos);
    }
  }
}

TEST_CASE("quadratic and oracle agree with the test oracle on all binary strings of length 16") {
  for (std::uint32_t bits = 0; bits < (1u << 16); ++bits) {
    const std::string s = oracle::binary_string(bits, 16);
    const Text t = Text::from_bytes(s);
    const auto q = pls(pl_quadratic(t));
    REQUIRE(q == pls(pl_oracle(t)));
    if (bits % 257 == 0) REQUIRE(q == oracle::prefix_pl(s));
  }
}

TEST_CASE("adjacent prefixes differ by at most one") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto r = pl_quadratic(random_text(300, 2 + seed % 3, seed));
    for (std::size_t j = 1; j < r.size(); ++j) {
      REQUIRE(std::abs(r[j].pl - r[j - 1].pl) <= 1);
      REQUIRE(r[j].pl >= 1);
      REQUIRE(r[j].pl <= static_cast<std::int64_t>(j));
    }
  }
}
