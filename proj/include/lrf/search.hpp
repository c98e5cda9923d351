#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "lrf/coloring.hpp"
#include "lrf/tree.hpp"

namespace lrf {

struct SearchFound {
  Coloring coloring;
  std::uint64_t nodes_explored = 0;
};

struct SearchExhausted {
  std::uint64_t nodes_explored = 0;
};

struct SearchLimitReached {
  std::uint64_t nodes_explored = 0;
};

using SearchResult = std::variant<SearchFound, SearchExhausted, SearchLimitReached>;

inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;

/// Checks the paths that end at a newly colored vertex.
///
/// Vertices are colored in breadth-first order, so the newest vertex is a
/// leaf of the colored part and every path through it ends there. Only
/// prefixes of the color words read from that vertex can become new long
/// squares.
class IncrementalChecker {
 public:
  explicit IncrementalChecker(const RootedTree& t);

  std::span<const VertexId> order() const { return order_; }

  /// True if coloring order()[position] adds no long square, given colors
  /// for order()[0..position] (indexed by vertex id).
  bool accepts(std::span<const Color> colors, std::size_t position);

 private:
  const RootedTree* tree_;
  std::vector<VertexId> order_;
  std::vector<std::size_t> rank_;  // position of each vertex in order_
  std::vector<Color> word_;
  struct Frame {
    VertexId vertex;
    VertexId from;
    std::size_t next;
  };
  std::vector<Frame> stack_;
};

/// Complete depth-first search for a long-repetition-free k-coloring.
/// The root's color is fixed to 0 (colors can always be permuted so). Every
/// FOUND coloring is re-verified with verify_lrf before it is returned.
SearchResult search_lrf_coloring(const RootedTree& t, unsigned k,
                                 std::uint64_t node_limit = kDefaultNodeLimit);

inline constexpr std::uint64_t kCensusGuard = std::uint64_t{1} << 20;

/// Number of valid colorings among all k^n assignments. Throws when
/// k^n exceeds 2^20.
std::uint64_t brute_force_census(const RootedTree& t, unsigned k, unsigned threads = 1);

}  // namespace lrf
