#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lrf/tree.hpp"
#include "lrf/word.hpp"

namespace lrf {

using Color = Letter;

/// Total vertex coloring with colors 0..k-1 for a tree of matching size.
struct Coloring {
  std::vector<Color> colors;
  unsigned k = 2;

  Coloring() = default;
  /// Throws lrf::Error unless 2 <= k <= 10 and every color is below k.
  Coloring(std::vector<Color> colors, unsigned k);

  std::size_t size() const { return colors.size(); }
  Color operator[](VertexId v) const { return colors[v]; }
  /// Throws lrf::Error if the coloring does not cover exactly `t`'s vertices.
  void check_fits(const RootedTree& t) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class Verdict { kValid, kViolation };

/// Outcome of a long-repetition-free check. A violation carries the path,
/// its color word, and a long square inside that word.
struct LrfCertificate {
  Verdict verdict = Verdict::kValid;
  std::vector<VertexId> path;
  std::vector<Color> word;
  SquareWitness square;

  bool valid() const { return verdict == Verdict::kValid; }
};

/// Vertex at depth i gets color a[i], with a[0] at the root. Throws when
/// |a| < height + 1.
Coloring generation_coloring(const RootedTree& t, const Word& a);

/// Colors along path_between(u, v), any k.
std::vector<Color> path_colors(const RootedTree& t, const Coloring& c, VertexId u, VertexId v);

/// Binary color word along path_between(u, v). Throws for k > 2.
Word path_word(const RootedTree& t, const Coloring& c, VertexId u, VertexId v);

/// Checks every path by walking from each degree-1 vertex and testing the
/// squares that end at each newly reached vertex. A violation is reported
/// canonically: the lexicographically first pair of degree-1 endpoints
/// (a < b) whose path word has a long square, with that word's first square.
LrfCertificate verify_lrf(const RootedTree& t, const Coloring& c);

/// Cross-check oracle: every vertex pair u < v, path word scanned directly.
/// Violations report the first such pair.
LrfCertificate verify_lrf_all_pairs(const RootedTree& t, const Coloring& c);

/// Re-verifies a VIOLATION certificate from scratch: the path is a simple
/// path of `t`, the word is its coloring, and the square holds in the word.
bool recheck_certificate(const RootedTree& t, const Coloring& c, const LrfCertificate& cert);

struct TurnWordViolation {
  unsigned turn_depth = 0;  // k
  unsigned from_depth = 0;  // i
  unsigned to_depth = 0;    // j; equal to turn_depth for a monotone factor
  bool monotone = false;
  Word word;
  SquareWitness square;
};

struct ReductionReport {
  bool valid = true;
  std::size_t turn_words = 0;
  std::size_t monotone_factors = 0;
  std::vector<TurnWordViolation> violations;  // in enumeration order
};

/// Finite check that every tree of height <= h generation-colored by `a` is
/// long-repetition-free. Enumerates the monotone factors of `a` and every
/// turn word reverse(a[k..i]) · a[k+1..j] with 0 <= k < i, j <= h.
/// Throws unless |a| == h + 1.
ReductionReport prop2_reduction(const Word& a, unsigned h);

/// Two-branch tree realizing a turn word: a chain of depth max(i, j) from the
/// root with a second branch leaving the depth-k vertex down to depth j.
/// Returns the tree and the two path endpoints.
struct Broom {
  RootedTree tree;
  VertexId first = 0;
  VertexId second = 0;
};
Broom broom_for_turn(unsigned turn_depth, unsigned from_depth, unsigned to_depth);

}  // namespace lrf
