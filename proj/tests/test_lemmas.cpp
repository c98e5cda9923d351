#include <doctest.h>

#include <algorithm>

#include "lrf/lemmas.hpp"
#include "support/oracles.hpp"

using lrf::Word;

TEST_CASE("abxba sweep") {
  SUBCASE("max 0 is the single word 0110") {
    const auto r = lrf::check_lemma_abxba(0);
    CHECK(r.checked == 1);
    CHECK(r.holds());
  }
  SUBCASE("max 2 includes 010010 with factor 1001") {
    const auto r = lrf::check_lemma_abxba(2);
    CHECK(r.checked == 7);
    CHECK(r.holds());
    const auto p = lrf::contains_long_palindrome(Word::parse("010010"));
    REQUIRE(p);
    CHECK(Word::parse("010010").factor(p->offset, p->length) == Word::parse("1001"));
  }
  SUBCASE("max 16, threaded, no counterexamples") {
    const auto r = lrf::check_lemma_abxba(16, 3);
    CHECK(r.checked == 131071);
    CHECK(r.counterexamples.empty());
  }
}

TEST_CASE("palindrome9 report") {
  const auto r = lrf::check_lemma_palindrome9();
  CHECK(r.checked == 512);
  CHECK(r.with_long_palindrome == 512);
  CHECK(r.length9_free.empty());
  // Frozen from the brute-force oracle below.
  CHECK(r.length8_free.size() == 2);
  CHECK(std::find(r.length8_free.begin(), r.length8_free.end(), Word::parse("00010111")) != r.length8_free.end());
  CHECK(r.third_condition_redundant);
  CHECK(r.holds());
}

TEST_CASE("length-8 census oracle") {
  std::vector<std::string> expected;
  for (std::uint64_t b = 0; b < 256; ++b) {
    const auto s = oracle::bits(b, 8);
    if (!oracle::has_long_palindrome(s)) expected.push_back(s);
  }
  CHECK(expected == std::vector<std::string>{"00010111", "11101000"});
}

TEST_CASE("lpf census") {
  CHECK(lrf::lpf_census(3).size() == 8);
  CHECK(lrf::lpf_census(9).empty());
  const auto eight = lrf::lpf_census(8, 4);
  CHECK(std::is_sorted(eight.begin(), eight.end()));
  CHECK(std::find(eight.begin(), eight.end(), Word::parse("00010111")) != eight.end());
  CHECK_THROWS_AS(lrf::lpf_census(25), lrf::Error);
  CHECK(lrf::lpf_census(0).size() == 1);
}

TEST_CASE("lsf census matches brute force and is thread-count independent") {
  std::size_t expected = 0;
  for (std::uint64_t b = 0; b < 64; ++b) expected += !oracle::first_long_square(oracle::bits(b, 6));
  CHECK(expected == 56);
  CHECK(lrf::lsf_census(6).size() == 56);
  CHECK(lrf::lsf_census(12, 1) == lrf::lsf_census(12, 5));
}

TEST_CASE("window checks decide length-9 freeness and the triple check adds nothing") {
  for (std::uint64_t b = 0; b < 512; ++b) {
    const Word word = Word::from_bits(b, 9);
    const bool free = !lrf::contains_long_palindrome(word);
    CHECK(lrf::window_check(word) == free);
    if (lrf::window_check(word)) CHECK(lrf::interior_triple_check(word));
  }
}
