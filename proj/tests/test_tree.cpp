#include <doctest.h>

#include <random>

#include "lrf/tree.hpp"
#include "support/oracles.hpp"

using lrf::RootedTree;
using lrf::VertexId;
using Parents = std::vector<std::optional<VertexId>>;

namespace {

RootedTree chain(std::size_t n) {
  Parents p(n);
  for (std::size_t v = 1; v < n; ++v) p[v] = static_cast<VertexId>(v - 1);
  return RootedTree::from_parents(p);
}

}  // namespace

TEST_CASE("build_from_parent_list") {
  SUBCASE("single vertex") {
    const auto t = RootedTree::from_parents(Parents{std::nullopt});
    CHECK(t.size() == 1);
    CHECK(t.height() == 0);
  }
  SUBCASE("star is T_1") {
    const auto t = RootedTree::from_parents(Parents{std::nullopt, 0, 0, 0});
    CHECK(t.size() == 4);
    CHECK(t.height() == 1);
    CHECK(t.children(0).size() == 3);
    CHECK(t.generation_sizes() == std::vector<std::size_t>{1, 3});
  }
  SUBCASE("invalid structures") {
    CHECK_THROWS_WITH_AS(RootedTree::from_parents(Parents{2, 0, 1}), doctest::Contains("no root"), lrf::Error);
    CHECK_THROWS_WITH_AS(RootedTree::from_parents(Parents{std::nullopt, std::nullopt}), doctest::Contains("multiple roots"),
                         lrf::Error);
    CHECK_THROWS_WITH_AS(RootedTree::from_parents(Parents{std::nullopt, 5}), doctest::Contains("out-of-range"), lrf::Error);
    CHECK_THROWS_WITH_AS(RootedTree::from_parents(Parents{std::nullopt, 2, 1}), doctest::Contains("cycle"), lrf::Error);
    CHECK_THROWS_AS(RootedTree::from_parents(Parents{}), lrf::Error);
  }
}

TEST_CASE("structural invariants on random trees") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const auto parents = oracle::random_parents(rng, 1 + rng() % 60);
    const auto t = RootedTree::from_parents(parents);
    std::size_t child_total = 0;
    for (VertexId v = 0; v < t.size(); ++v) {
      const auto kids = t.children(v);
      CHECK(std::is_sorted(kids.begin(), kids.end()));
      child_total += kids.size();
      for (VertexId c : kids) {
        CHECK(t.parent(c) == v);
        CHECK(t.depth(c) == t.depth(v) + 1);
      }
    }
    CHECK(child_total == t.size() - 1);
    CHECK(t.depth(t.root()) == 0);
    CHECK(t.parent_list() == parents);
  }
}

TEST_CASE("validation rejects exactly the corrupt parent lists") {
  std::mt19937_64 rng(11);
  int rejected = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<std::optional<std::int64_t>> raw(n);
    Parents ids(n);
    bool out_of_range = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (rng() % 5 == 0) continue;
      raw[v] = static_cast<std::int64_t>(rng() % (n + 1));
      if (*raw[v] >= static_cast<std::int64_t>(n)) out_of_range = true;
      ids[v] = static_cast<VertexId>(*raw[v]);
    }
    const bool valid = oracle::is_rooted_tree(raw);
    bool accepted = true;
    try {
      RootedTree::from_parents(ids);
    } catch (const lrf::Error&) {
      accepted = false;
    }
    CHECK(accepted == valid);
    if (out_of_range) CHECK_FALSE(accepted);
    rejected += !accepted;
  }
  CHECK(rejected > 100);
}

TEST_CASE("path_between") {
  const auto star = RootedTree::from_parents(Parents{std::nullopt, 0, 0, 0});
  CHECK(lrf::path_between(star, 1, 2) == std::vector<VertexId>{1, 0, 2});
  CHECK(lrf::path_between(star, 3, 3) == std::vector<VertexId>{3});
  CHECK_THROWS_AS(lrf::path_between(star, 0, 4), lrf::Error);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = trial < 2 ? 10000 : 1 + rng() % 300;
    const auto parents = oracle::random_parents(rng, n);
    const auto t = RootedTree::from_parents(parents);
    const auto adj = oracle::adjacency(parents);
    for (int q = 0; q < 200; ++q) {
      const auto u = static_cast<VertexId>(rng() % n);
      const auto v = static_cast<VertexId>(rng() % n);
      const auto path = lrf::path_between(t, u, v);
      CHECK(path == oracle::bfs_path(adj, u, v));
      auto back = lrf::path_between(t, v, u);
      std::reverse(back.begin(), back.end());
      CHECK(back == path);
      const VertexId top = lrf::lowest_common_ancestor(t, u, v);
      CHECK(path.size() - 1 == lrf::distance(t, u, v));
      CHECK(lrf::distance(t, u, v) == t.depth(u) + t.depth(v) - 2 * t.depth(top));
    }
  }
}

TEST_CASE("center_and_radius") {
  const auto single = lrf::center_and_radius(chain(1));
  CHECK(single.radius == 0);
  CHECK(single.center == std::vector<VertexId>{0});

  const auto path5 = lrf::center_and_radius(chain(5));
  CHECK(path5.radius == 2);
  CHECK(path5.center == std::vector<VertexId>{2});

  const auto path4 = lrf::center_and_radius(chain(4));
  CHECK(path4.radius == 2);
  CHECK(path4.center == std::vector<VertexId>{1, 2});

  const auto star = lrf::center_and_radius(RootedTree::from_parents(Parents{std::nullopt, 0, 0, 0}));
  CHECK(star.radius == 1);
  CHECK(star.center == std::vector<VertexId>{0});

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto parents = oracle::random_parents(rng, 1 + rng() % 80);
    const auto t = RootedTree::from_parents(parents);
    const auto [radius, center] = oracle::radius_center(oracle::adjacency(parents));
    const auto got = lrf::center_and_radius(t);
    CHECK(got.radius == radius);
    CHECK(got.center == center);
    // Rooting at a center vertex gives height = radius.
    for (VertexId c : got.center) CHECK(lrf::reroot(t, c).height() == got.radius);
  }
}

TEST_CASE("Tyler trees") {
  CHECK(lrf::TylerSpec::classic(2).fanout == std::vector<std::uint64_t>{5, 3});
  CHECK(lrf::build_tyler(lrf::TylerSpec::classic(1)).size() == 4);
  CHECK(lrf::build_tyler(lrf::TylerSpec::classic(2)).size() == 21);
  CHECK_THROWS_WITH_AS(lrf::build_tyler(lrf::TylerSpec::classic(8)), doctest::Contains("229768889091"), lrf::Error);
  CHECK_THROWS_AS(lrf::build_tyler(lrf::TylerSpec{{2, 0}}), lrf::Error);

  CHECK(lrf::tyler_vertex_count(0).vertices == 1);
  CHECK(lrf::tyler_vertex_count(1).vertices == 4);
  CHECK(lrf::tyler_vertex_count(2).vertices == 21);
  CHECK(lrf::tyler_vertex_count(3).subtrees == 9);

  for (unsigned n = 0; n <= 5; ++n) {
    const auto spec = lrf::TylerSpec::classic(n);
    const auto t = lrf::build_tyler(spec);
    CHECK(t.size() == lrf::tyler_vertex_count(n).vertices);
    CHECK(spec.predicted_vertices() == lrf::tyler_vertex_count(n).vertices);
    // Generation sizes are running products of the fanouts.
    const auto sizes = t.generation_sizes();
    REQUIRE(sizes.size() == n + 1);
    std::size_t expected = 1;
    for (unsigned j = 0; j <= n; ++j) {
      CHECK(sizes[j] == expected);
      if (j < n) expected *= spec.fanout[j];
    }
    for (VertexId v = 0; v < t.size(); ++v) {
      if (t.depth(v) < n) CHECK(t.children(v).size() == spec.fanout[t.depth(v)]);
    }
    // Breadth-first numbering.
    const auto order = t.bfs_order();
    for (std::size_t i = 0; i < order.size(); ++i) CHECK(order[i] == i);
  }
  // T_n contains 2^n + 1 copies of T_{n-1}.
  CHECK(lrf::build_tyler(lrf::TylerSpec::classic(3)).children(0).size() == lrf::tyler_vertex_count(3).subtrees);
}

TEST_CASE("random_tree respects depth bound and seed") {
  const auto a = lrf::random_tree(500, 7, 42);
  const auto b = lrf::random_tree(500, 7, 42);
  CHECK(a.parent_list() == b.parent_list());
  CHECK(a.height() <= 7);
  CHECK(lrf::center_and_radius(a).radius <= 7);
}
