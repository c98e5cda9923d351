#include "lrf/lemmas.hpp"

#include "lrf/parallel.hpp"

namespace lrf {

namespace {

template <typename Pred>
std::vector<Word> census(std::size_t length, unsigned threads, Pred keep) {
  if (length > kCensusMaxLength) {
    throw Error("census length " + std::to_string(length) + " exceeds guard " +
                std::to_string(kCensusMaxLength));
  }
  const std::size_t total = std::size_t{1} << length;
  auto parts = parallel_chunks(total, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<Word> found;
    for (std::size_t bits = begin; bits < end; ++bits) {
      Word w = Word::from_bits(bits, length);
      if (keep(w)) found.push_back(std::move(w));
    }
    return found;
  });
  std::vector<Word> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

}  // namespace

AbxbaReport check_lemma_abxba(std::size_t max_x_len, unsigned threads) {
  if (max_x_len > 40) throw Error("--max " + std::to_string(max_x_len) + " exceeds guard 40");
  AbxbaReport report;
  report.max_x_len = max_x_len;
  const Word prefix = Word::parse("01");
  const Word suffix = Word::parse("10");
  for (std::size_t len = 0; len <= max_x_len; ++len) {
    const std::size_t total = std::size_t{1} << len;
    auto parts = parallel_chunks(total, threads, [&](std::size_t begin, std::size_t end) {
      std::vector<Word> bad;
      for (std::size_t bits = begin; bits < end; ++bits) {
        Word w = prefix + Word::from_bits(bits, len) + suffix;
        if (!contains_long_palindrome(w)) bad.push_back(std::move(w));
      }
      return bad;
    });
    for (auto& p : parts) report.counterexamples.insert(report.counterexamples.end(), p.begin(), p.end());
    report.checked += total;
  }
  return report;
}

Palindrome9Report check_lemma_palindrome9() {
  Palindrome9Report report;
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const Word w = Word::from_bits(bits, 9);
    ++report.checked;
    if (contains_long_palindrome(w)) {
      ++report.with_long_palindrome;
    } else {
      report.length9_free.push_back(w);
    }
  }
  report.length8_free = lpf_census(8);

  bool redundant = true;
  for (std::size_t len = 4; len <= 16 && redundant; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const Word w = Word::from_bits(bits, len);
      const bool free = !contains_long_palindrome(w);
      if (window_check(w) != free || (window_check(w) && !interior_triple_check(w))) {
        redundant = false;
        break;
      }
    }
  }
  report.third_condition_redundant = redundant;
  return report;
}

std::vector<Word> lpf_census(std::size_t length, unsigned threads) {
  return census(length, threads, [](const Word& w) { return !contains_long_palindrome(w).has_value(); });
}

std::vector<Word> lsf_census(std::size_t length, unsigned threads) {
  return census(length, threads, [](const Word& w) { return !contains_long_square(w).has_value(); });
}

}  // namespace lrf
