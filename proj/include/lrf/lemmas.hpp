#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lrf/word.hpp"

namespace lrf {

struct AbxbaReport {
  std::size_t max_x_len = 0;
  std::uint64_t checked = 0;
  std::vector<Word> counterexamples;  // full words 01·x·10 with no long palindrome
  bool holds() const { return counterexamples.empty(); }
};

/// Every 01·x·10 with |x| <= max_x_len contains a long palindrome.
AbxbaReport check_lemma_abxba(std::size_t max_x_len, unsigned threads = 1);

struct Palindrome9Report {
  std::uint64_t checked = 0;
  std::uint64_t with_long_palindrome = 0;
  std::vector<Word> length9_free;  // expected empty
  std::vector<Word> length8_free;  // contains 00010111
  // The two window conditions alone decide long-palindrome-freeness and the
  // interior-triple condition excludes nothing further, for every word of
  // length 4..16.
  bool third_condition_redundant = false;
  bool holds() const { return length9_free.empty() && with_long_palindrome == checked; }
};

Palindrome9Report check_lemma_palindrome9();

inline constexpr std::size_t kCensusMaxLength = 24;

/// All long-palindrome-free words of the given length, lexicographic.
/// Throws lrf::Error above kCensusMaxLength.
std::vector<Word> lpf_census(std::size_t length, unsigned threads = 1);

/// All long-square-free words of the given length, lexicographic.
std::vector<Word> lsf_census(std::size_t length, unsigned threads = 1);

}  // namespace lrf
