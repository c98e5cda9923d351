#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrf/error.hpp"

namespace lrf {

using Letter = std::uint8_t;

/// Finite word over the binary alphabet {0,1}. The empty word is the
/// default-constructed value.
class Word {
 public:
  Word() = default;

  /// Throws lrf::Error if any letter is not 0 or 1.
  explicit Word(std::vector<Letter> letters);

  /// Parses a string of '0'/'1' characters. The empty string is the empty word.
  static Word parse(std::string_view text);

  /// The `length` low bits of `bits`, most significant first, so that
  /// counting 0 .. 2^length-1 enumerates words in lexicographic order.
  static Word from_bits(std::uint64_t bits, std::size_t length);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word reversed() const;
  Word complemented() const;
  Word factor(std::size_t offset, std::size_t length) const;
  std::string str() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word reverse(const Word& w);

struct PalindromeWitness {
  std::size_t offset = 0;
  std::size_t length = 0;
  friend bool operator==(const PalindromeWitness&, const PalindromeWitness&) = default;
};

struct SquareWitness {
  std::size_t offset = 0;
  std::size_t period = 0;
  friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

inline constexpr std::size_t kMinSquarePeriod = 3;
inline constexpr std::size_t kMinPalindromeLength = 4;

// Scanners over raw letter sequences. They are alphabet-agnostic so that
// colorings with more than two colors can reuse them.
std::optional<PalindromeWitness> find_long_palindrome(std::span<const Letter> w);
std::optional<SquareWitness> find_long_square(std::span<const Letter> w);
bool is_square_at(std::span<const Letter> w, SquareWitness s);
bool is_palindrome_at(std::span<const Letter> w, PalindromeWitness p);

/// First palindromic window of length 4 (then 5) by offset. Every long
/// palindrome has such a window at its center, so absence means the word is
/// long-palindrome-free.
std::optional<PalindromeWitness> contains_long_palindrome(const Word& w);

/// Smallest offset, then smallest period >= 3.
std::optional<SquareWitness> contains_long_square(const Word& w);

/// Window form of long-palindrome-freeness: whenever a_i = a_{i+3}
/// the inner pair must differ, and whenever a_i = a_{i+4} the letters
/// a_{i+1}, a_{i+3} must differ.
bool window_check(const Word& w);

/// Third condition (no run of three equal letters at an interior position,
/// i.e. one with a letter on each side of the run plus one). Implied by the
/// other two; kept to measure that.
bool interior_triple_check(const Word& w);

}  // namespace lrf
