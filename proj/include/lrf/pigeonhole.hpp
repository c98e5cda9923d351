#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "lrf/coloring.hpp"
#include "lrf/tree.hpp"
#include "lrf/word.hpp"

namespace lrf {

/// Complete binary tree of the given height embedded in a host tree.
///
/// Abstract positions use heap order: position 0 is the root and the left
/// and right children of position p are 2p+1 and 2p+2. Every position at
/// generation i < height has the color generation_word[i].
struct EmbeddedBinaryTree {
  unsigned height = 0;
  std::vector<VertexId> nodes;  // 2^(height+1) - 1 host vertex ids
  Word generation_word;         // generations 0..height-1

  static std::size_t left(std::size_t p) { return 2 * p + 1; }
  static std::size_t right(std::size_t p) { return 2 * p + 2; }
  /// "-" for the root, otherwise the L/R path from the root.
  static std::string address(std::size_t position);
  /// Position reached by `lefts` left steps from the root.
  static std::size_t left_chain(unsigned lefts);
};

struct ExtractionFailure {
  unsigned depth = 0;
  VertexId vertex = 0;
  std::string explanation;
};

using ExtractionOutcome = std::variant<EmbeddedBinaryTree, ExtractionFailure>;

/// Bottom-up pigeonhole extraction of a binary subtree of the host's full
/// height whose generations are each monochromatic.
///
/// A vertex with r levels left below it is summarized by its signature: its
/// own color followed by the signature of its chosen children, r+1 colors in
/// all. It keeps the lexicographically smallest pair of child ids whose
/// extractions share a signature. Classic Tyler fanouts (2^r + 1 children
/// against 2^r possible signatures) always succeed.
ExtractionOutcome extract_binary_subtree(const RootedTree& t, const Coloring& c);

/// Independent check of the embedding invariants against host and coloring.
bool verify_embedding(const RootedTree& t, const Coloring& c, const EmbeddedBinaryTree& e);

/// Word shapes of the reflected word, written over c1 = first letter and
/// c2 = the other letter.
enum class ReflectionShape {
  kFourConstant,     // c1c1c1c1c1c1c1
  kFourSplit,        // c1c2c2c1c2c2c1
  kFiveConstant,     // c1 nine times
  kFiveAlternating,  // c1c2c1c2c1c2c1c2c1
  kFiveCentered,     // c1c1c2c1c1c1c2c1c1
  kFiveHollow,       // c1c2c2c2c1c2c2c2c1
};

const char* shape_pattern(ReflectionShape s);

struct Reflection {
  PalindromeWitness palindrome;  // in the generation word
  Word reflected;                // length 2m + 1
  SquareWitness square;          // offset 0, period m
  ReflectionShape shape;
};

/// Picks the first long palindrome b[j..j+m] (m = 3 or 4) and builds
/// b[j+m..j+1] · b[j] · b[j+1..j+m]. Throws for |b| < 9.
Reflection reflect_word(const Word& b);

/// Maps a reflected word onto its shape; empty if it matches none.
std::optional<ReflectionShape> classify_reflection(const Word& c);

struct ReflectSweepReport {
  std::size_t checked = 0;
  std::size_t verified = 0;
  std::size_t shape_counts[6] = {};
  std::vector<Word> failures;
  bool holds() const { return failures.empty() && verified == checked; }
};

/// reflect_word on all 512 words of length 9, each result re-verified.
ReflectSweepReport reflect_sweep();

struct NotRefuted {
  std::string reason;
};

struct Refutation {
  LrfCertificate certificate;
  EmbeddedBinaryTree embedding;
  Reflection reflection;
};

using RefuteOutcome = std::variant<Refutation, NotRefuted>;

inline constexpr std::size_t kReflectMinLength = 9;

/// Extraction, then reflection of a palindrome of the generation word into
/// a path of the host. Inconclusive (NotRefuted) when extraction fails or
/// the generation word is shorter than 9.
RefuteOutcome refute(const RootedTree& t, const Coloring& c);

}  // namespace lrf
