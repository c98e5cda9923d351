#include "lrf/word.hpp"

#include <algorithm>

namespace lrf {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] > 1) {
      throw Error("letter " + std::to_string(letters_[i]) + " at position " + std::to_string(i) +
                  " is not binary");
    }
  }
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch != '0' && ch != '1') {
      throw Error("invalid character '" + std::string(1, ch) + "' at position " + std::to_string(i) +
                  " in word '" + std::string(text) + "'");
    }
    letters.push_back(static_cast<Letter>(ch - '0'));
  }
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

Word Word::from_bits(std::uint64_t bits, std::size_t length) {
  Word w;
  w.letters_.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    w.letters_[length - 1 - i] = static_cast<Letter>((bits >> i) & 1U);
  }
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters_.begin(), w.letters_.end());
  return w;
}

Word Word::complemented() const {
  Word w = *this;
  for (auto& l : w.letters_) l ^= 1U;
  return w;
}

Word Word::factor(std::size_t offset, std::size_t length) const {
  if (offset > size() || length > size() - offset) {
    throw Error("factor [" + std::to_string(offset) + ", +" + std::to_string(length) +
                ") out of range for word of length " + std::to_string(size()));
  }
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(offset),
                    letters_.begin() + static_cast<std::ptrdiff_t>(offset + length));
  return w;
}

std::string Word::str() const {
  std::string s(letters_.size(), '0');
  for (std::size_t i = 0; i < letters_.size(); ++i) s[i] = static_cast<char>('0' + letters_[i]);
  return s;
}

Word operator+(const Word& a, const Word& b) {
  Word w = a;
  w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
  return w;
}

Word reverse(const Word& w) { return w.reversed(); }

bool is_palindrome_at(std::span<const Letter> w, PalindromeWitness p) {
  if (p.offset > w.size() || p.length > w.size() - p.offset) return false;
  for (std::size_t i = 0; i < p.length / 2; ++i) {
    if (w[p.offset + i] != w[p.offset + p.length - 1 - i]) return false;
  }
  return true;
}

bool is_square_at(std::span<const Letter> w, SquareWitness s) {
  if (s.period == 0 || s.offset > w.size() || 2 * s.period > w.size() - s.offset) return false;
  return std::equal(w.begin() + static_cast<std::ptrdiff_t>(s.offset),
                    w.begin() + static_cast<std::ptrdiff_t>(s.offset + s.period),
                    w.begin() + static_cast<std::ptrdiff_t>(s.offset + s.period));
}

std::optional<PalindromeWitness> find_long_palindrome(std::span<const Letter> w) {
  for (std::size_t off = 0; off + kMinPalindromeLength <= w.size(); ++off) {
    for (std::size_t len : {std::size_t{4}, std::size_t{5}}) {
      const PalindromeWitness p{off, len};
      if (is_palindrome_at(w, p)) return p;
    }
  }
  return std::nullopt;
}

std::optional<SquareWitness> find_long_square(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t off = 0; off + 2 * kMinSquarePeriod <= n; ++off) {
    for (std::size_t p = kMinSquarePeriod; off + 2 * p <= n; ++p) {
      const SquareWitness s{off, p};
      if (is_square_at(w, s)) return s;
    }
  }
  return std::nullopt;
}

std::optional<PalindromeWitness> contains_long_palindrome(const Word& w) {
  return find_long_palindrome(w.letters());
}

std::optional<SquareWitness> contains_long_square(const Word& w) {
  return find_long_square(w.letters());
}

bool window_check(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 3 < n; ++i) {
    if (w[i] == w[i + 3] && w[i + 1] != (w[i + 2] ^ 1U)) return false;
  }
  for (std::size_t i = 0; i + 4 < n; ++i) {
    if (w[i] == w[i + 4] && w[i + 1] != (w[i + 3] ^ 1U)) return false;
  }
  return true;
}

bool interior_triple_check(const Word& w) {
  const std::size_t n = w.size();
  // Run a_i a_{i+1} a_{i+2} with a_{i-1} and a_{i+3} present.
  for (std::size_t i = 1; i + 3 < n; ++i) {
    if (w[i] == w[i + 1] && w[i + 1] != (w[i + 2] ^ 1U)) return false;
  }
  return true;
}

}  // namespace lrf
