#include "lrf/tree.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>

namespace lrf {

namespace {

std::string vid(std::size_t v) { return std::to_string(v); }

std::vector<std::size_t> bfs_distances(const RootedTree& t, VertexId from) {
  std::vector<std::size_t> dist(t.size(), std::numeric_limits<std::size_t>::max());
  std::deque<VertexId> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : t.neighbors(v)) {
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

VertexId farthest(const std::vector<std::size_t>& dist) {
  return static_cast<VertexId>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace

RootedTree RootedTree::from_parents(std::span<const std::optional<VertexId>> parents) {
  const std::size_t n = parents.size();
  if (n == 0) throw Error("tree must have at least one vertex");
  if (n >= kNoVertex) throw Error("tree has too many vertices: " + vid(n));

  RootedTree t;
  t.parent_.assign(n, kNoVertex);
  std::optional<VertexId> root;
  for (std::size_t v = 0; v < n; ++v) {
    if (!parents[v]) {
      if (root) throw Error("multiple roots: vertices " + vid(*root) + " and " + vid(v));
      root = static_cast<VertexId>(v);
      continue;
    }
    const VertexId p = *parents[v];
    if (p >= n) throw Error("vertex " + vid(v) + " has out-of-range parent " + vid(p));
    if (p == v) throw Error("cycle detected: vertex " + vid(v) + " is its own parent");
    t.parent_[v] = p;
  }
  if (!root) throw Error("no root: every vertex has a parent (cycle through vertex 0)");
  t.root_ = *root;

  // Depths by walking up to the first vertex of known depth; a walk that
  // revisits a vertex of the current walk is a cycle.
  constexpr unsigned kUnknown = std::numeric_limits<unsigned>::max();
  constexpr unsigned kOnWalk = kUnknown - 1;
  t.depth_.assign(n, kUnknown);
  t.depth_[t.root_] = 0;
  std::vector<VertexId> walk;
  for (std::size_t start = 0; start < n; ++start) {
    VertexId v = static_cast<VertexId>(start);
    walk.clear();
    while (t.depth_[v] == kUnknown) {
      t.depth_[v] = kOnWalk;
      walk.push_back(v);
      v = t.parent_[v];
    }
    if (t.depth_[v] == kOnWalk) throw Error("cycle detected through vertex " + vid(v));
    unsigned d = t.depth_[v];
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) t.depth_[*it] = ++d;
  }
  t.height_ = *std::max_element(t.depth_.begin(), t.depth_.end());

  t.child_offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (t.parent_[v] != kNoVertex) ++t.child_offset_[t.parent_[v] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) t.child_offset_[v + 1] += t.child_offset_[v];
  t.child_list_.resize(n - 1);
  std::vector<std::size_t> fill(t.child_offset_.begin(), t.child_offset_.end() - 1);
  // Increasing v keeps each child list sorted.
  for (std::size_t v = 0; v < n; ++v) {
    if (t.parent_[v] != kNoVertex) t.child_list_[fill[t.parent_[v]]++] = static_cast<VertexId>(v);
  }
  return t;
}

void RootedTree::check_vertex(VertexId v) const {
  if (v >= size()) throw Error("invalid vertex id " + vid(v) + " (tree has " + vid(size()) + " vertices)");
}

std::optional<VertexId> RootedTree::parent(VertexId v) const {
  check_vertex(v);
  if (parent_[v] == kNoVertex) return std::nullopt;
  return parent_[v];
}

std::span<const VertexId> RootedTree::children(VertexId v) const {
  check_vertex(v);
  return std::span<const VertexId>(child_list_).subspan(child_offset_[v], child_offset_[v + 1] - child_offset_[v]);
}

std::size_t RootedTree::degree(VertexId v) const {
  return children(v).size() + (parent_[v] == kNoVertex ? 0 : 1);
}

std::vector<VertexId> RootedTree::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  const auto kids = children(v);
  out.reserve(kids.size() + 1);
  if (parent_[v] != kNoVertex) out.push_back(parent_[v]);
  out.insert(out.end(), kids.begin(), kids.end());
  return out;
}

bool RootedTree::adjacent(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return parent_[u] == v || parent_[v] == u;
}

std::vector<std::size_t> RootedTree::generation_sizes() const {
  std::vector<std::size_t> sizes(height_ + 1, 0);
  for (unsigned d : depth_) ++sizes[d];
  return sizes;
}

std::vector<VertexId> RootedTree::bfs_order() const {
  std::vector<VertexId> order;
  order.reserve(size());
  order.push_back(root_);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto kids = children(order[i]);
    order.insert(order.end(), kids.begin(), kids.end());
  }
  return order;
}

std::vector<std::optional<VertexId>> RootedTree::parent_list() const {
  std::vector<std::optional<VertexId>> out(size());
  for (std::size_t v = 0; v < size(); ++v) {
    if (parent_[v] != kNoVertex) out[v] = parent_[v];
  }
  return out;
}

VertexId lowest_common_ancestor(const RootedTree& t, VertexId u, VertexId v) {
  t.check_vertex(u);
  t.check_vertex(v);
  while (t.depth(u) > t.depth(v)) u = *t.parent(u);
  while (t.depth(v) > t.depth(u)) v = *t.parent(v);
  while (u != v) {
    u = *t.parent(u);
    v = *t.parent(v);
  }
  return u;
}

std::vector<VertexId> path_between(const RootedTree& t, VertexId u, VertexId v) {
  const VertexId top = lowest_common_ancestor(t, u, v);
  std::vector<VertexId> up;
  for (VertexId x = u; x != top; x = *t.parent(x)) up.push_back(x);
  up.push_back(top);
  std::vector<VertexId> down;
  for (VertexId x = v; x != top; x = *t.parent(x)) down.push_back(x);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::size_t distance(const RootedTree& t, VertexId u, VertexId v) {
  const VertexId top = lowest_common_ancestor(t, u, v);
  return t.depth(u) + t.depth(v) - 2 * t.depth(top);
}

CenterRadius center_and_radius(const RootedTree& t) {
  const VertexId a = farthest(bfs_distances(t, t.root()));
  const auto from_a = bfs_distances(t, a);
  const VertexId b = farthest(from_a);
  const std::size_t diameter = from_a[b];

  // Walk the diameter path from b back toward a.
  std::vector<VertexId> diam{b};
  VertexId x = b;
  while (x != a) {
    for (VertexId w : t.neighbors(x)) {
      if (from_a[w] + 1 == from_a[x]) {
        x = w;
        break;
      }
    }
    diam.push_back(x);
  }

  CenterRadius out;
  out.radius = static_cast<unsigned>((diameter + 1) / 2);
  out.center.push_back(diam[diameter / 2]);
  if (diameter % 2 == 1) out.center.push_back(diam[diameter / 2 + 1]);
  std::sort(out.center.begin(), out.center.end());
  return out;
}

RootedTree reroot(const RootedTree& t, VertexId new_root) {
  t.check_vertex(new_root);
  std::vector<std::optional<VertexId>> parents(t.size());
  std::vector<bool> seen(t.size(), false);
  std::vector<VertexId> queue{new_root};
  seen[new_root] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexId v = queue[i];
    for (VertexId w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        parents[w] = v;
        queue.push_back(w);
      }
    }
  }
  return RootedTree::from_parents(parents);
}

TylerSpec TylerSpec::classic(unsigned height) {
  if (height > 62) throw Error("classic Tyler height " + std::to_string(height) + " exceeds 62");
  TylerSpec spec;
  for (unsigned j = 0; j < height; ++j) spec.fanout.push_back((std::uint64_t{1} << (height - j)) + 1);
  return spec;
}

boost::multiprecision::cpp_int TylerSpec::predicted_vertices() const {
  boost::multiprecision::cpp_int total = 1;
  boost::multiprecision::cpp_int generation = 1;
  for (std::uint64_t f : fanout) {
    generation *= f;
    total += generation;
  }
  return total;
}

RootedTree build_tyler(const TylerSpec& spec, std::uint64_t size_guard) {
  for (std::size_t j = 0; j < spec.fanout.size(); ++j) {
    if (spec.fanout[j] == 0) throw Error("fanout at depth " + std::to_string(j) + " must be at least 1");
  }
  const auto predicted = spec.predicted_vertices();
  if (predicted > size_guard) {
    throw Error("Tyler tree would have " + predicted.str() + " vertices, exceeding guard " +
                std::to_string(size_guard));
  }
  const auto n = predicted.convert_to<std::size_t>();
  std::vector<std::optional<VertexId>> parents;
  parents.reserve(n);
  parents.emplace_back();
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  for (std::uint64_t f : spec.fanout) {
    for (std::size_t v = level_begin; v < level_end; ++v) {
      for (std::uint64_t c = 0; c < f; ++c) parents.emplace_back(static_cast<VertexId>(v));
    }
    level_begin = level_end;
    level_end = parents.size();
  }
  return RootedTree::from_parents(parents);
}

TylerCount tyler_vertex_count(unsigned height) {
  using boost::multiprecision::cpp_int;
  TylerCount out;
  out.vertices = 1;
  for (unsigned j = 0; j < height; ++j) {
    cpp_int product = 1;
    for (unsigned k = height - j; k <= height; ++k) product *= (cpp_int(1) << k) + 1;
    out.vertices += product;
  }
  out.subtrees = (cpp_int(1) << height) + 1;
  return out;
}

RootedTree random_tree(std::size_t vertices, unsigned max_depth, std::uint64_t seed) {
  if (vertices == 0) throw Error("random tree needs at least one vertex");
  if (max_depth == 0 && vertices > 1) throw Error("max depth 0 allows only a single vertex");
  std::mt19937_64 rng(seed);
  std::vector<std::optional<VertexId>> parents(vertices);
  std::vector<unsigned> depth(vertices, 0);
  std::vector<VertexId> eligible{0};
  for (std::size_t v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    const VertexId p = eligible[pick(rng)];
    parents[v] = p;
    depth[v] = depth[p] + 1;
    if (depth[v] < max_depth) eligible.push_back(static_cast<VertexId>(v));
  }
  return RootedTree::from_parents(parents);
}

}  // namespace lrf
