#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrf/error.hpp"

namespace lrf {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Immutable rooted tree over dense vertex ids 0..n-1.
///
/// Children are stored in one flat array (offsets per vertex) and each
/// child list is sorted by id.
class RootedTree {
 public:
  /// Validates and builds. `parents[i]` is the parent of vertex i; exactly
  /// one entry must be empty. Throws lrf::Error naming the offending vertex
  /// on zero or multiple roots, an out-of-range parent, or a cycle.
  static RootedTree from_parents(std::span<const std::optional<VertexId>> parents);

  std::size_t size() const noexcept { return parent_.size(); }
  VertexId root() const noexcept { return root_; }
  std::optional<VertexId> parent(VertexId v) const;
  std::span<const VertexId> children(VertexId v) const;
  unsigned depth(VertexId v) const { return depth_.at(v); }
  unsigned height() const noexcept { return height_; }

  /// Degree in the underlying undirected tree.
  std::size_t degree(VertexId v) const;
  /// Parent first (if any), then children in id order.
  std::vector<VertexId> neighbors(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;

  /// Number of vertices at each depth 0..height.
  std::vector<std::size_t> generation_sizes() const;
  /// Vertices in breadth-first order from the root, children by id.
  std::vector<VertexId> bfs_order() const;
  /// Parent list with an empty entry at the root.
  std::vector<std::optional<VertexId>> parent_list() const;

  void check_vertex(VertexId v) const;

 private:
  std::vector<VertexId> parent_;
  std::vector<std::size_t> child_offset_;
  std::vector<VertexId> child_list_;
  std::vector<unsigned> depth_;
  VertexId root_ = 0;
  unsigned height_ = 0;
};

/// Unique simple path u..v through the lowest common ancestor.
std::vector<VertexId> path_between(const RootedTree& t, VertexId u, VertexId v);
std::size_t distance(const RootedTree& t, VertexId u, VertexId v);
VertexId lowest_common_ancestor(const RootedTree& t, VertexId u, VertexId v);

struct CenterRadius {
  std::vector<VertexId> center;  // sorted; one or two vertices
  unsigned radius = 0;
};

/// Independent of the current root.
CenterRadius center_and_radius(const RootedTree& t);

/// Same vertex ids, new root.
RootedTree reroot(const RootedTree& t, VertexId new_root);

struct TylerSpec {
  std::vector<std::uint64_t> fanout;  // children per vertex at depth j

  /// f_j = 2^(n-j) + 1.
  static TylerSpec classic(unsigned height);
  unsigned height() const { return static_cast<unsigned>(fanout.size()); }
  /// 1 + f_0 + f_0 f_1 + ... exactly.
  boost::multiprecision::cpp_int predicted_vertices() const;
};

inline constexpr std::uint64_t kDefaultSizeGuard = 10'000'000;

/// Breadth-first numbering, root 0. Refuses (lrf::Error with the exact
/// predicted count) when the tree would exceed `size_guard` vertices.
RootedTree build_tyler(const TylerSpec& spec, std::uint64_t size_guard = kDefaultSizeGuard);

struct TylerCount {
  boost::multiprecision::cpp_int vertices;
  boost::multiprecision::cpp_int subtrees;  // copies of T_{n-1} inside T_n: 2^n + 1
};

/// Closed-form vertex count 1 + sum_{j<n} prod_{k=n-j}^{n} (2^k + 1).
TylerCount tyler_vertex_count(unsigned height);

/// Random recursive tree: vertex i > 0 attaches to a uniformly chosen
/// earlier vertex whose depth is below `max_depth`. Root 0.
RootedTree random_tree(std::size_t vertices, unsigned max_depth, std::uint64_t seed);

}  // namespace lrf
