#include "lrf/search.hpp"

#include <numeric>
#include <stdexcept>

#include "lrf/parallel.hpp"

namespace lrf {

IncrementalChecker::IncrementalChecker(const RootedTree& t)
    : tree_(&t), order_(t.bfs_order()), rank_(t.size()) {
  for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = i;
}

bool IncrementalChecker::accepts(std::span<const Color> colors, std::size_t position) {
  const RootedTree& t = *tree_;
  const VertexId start = order_[position];
  stack_.assign(1, Frame{start, kNoVertex, 0});
  word_.assign(1, colors[start]);
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    const auto kids = t.children(top.vertex);
    const auto parent = t.parent(top.vertex);
    const std::size_t degree = kids.size() + (parent ? 1 : 0);
    if (top.next == degree) {
      stack_.pop_back();
      word_.pop_back();
      continue;
    }
    const std::size_t i = top.next++;
    const VertexId w = parent ? (i == 0 ? *parent : kids[i - 1]) : kids[i];
    if (w == top.from || rank_[w] > position) continue;
    const VertexId from = top.vertex;
    word_.push_back(colors[w]);
    const std::size_t len = word_.size();
    if (len % 2 == 0 && len >= 2 * kMinSquarePeriod && is_square_at(word_, SquareWitness{0, len / 2})) {
      return false;
    }
    stack_.push_back(Frame{w, from, 0});
  }
  return true;
}

SearchResult search_lrf_coloring(const RootedTree& t, unsigned k, std::uint64_t node_limit) {
  if (k < 2) throw Error("search needs at least 2 colors, got " + std::to_string(k));
  if (k > 10) throw Error("color count " + std::to_string(k) + " exceeds 10");
  IncrementalChecker checker(t);
  const auto order = checker.order();
  const std::size_t n = order.size();

  std::vector<Color> colors(t.size(), 0);
  std::vector<unsigned> next(n, 0);  // next color to try at each position
  std::uint64_t nodes = 0;

  // Root fixed to 0.
  ++nodes;
  std::size_t pos = 1;
  next[0] = k;
  while (pos < n) {
    if (next[pos] == k) {
      next[pos] = 0;
      --pos;
      if (pos == 0) return SearchExhausted{nodes};
      continue;
    }
    if (nodes >= node_limit) return SearchLimitReached{nodes};
    ++nodes;
    colors[order[pos]] = static_cast<Color>(next[pos]++);
    if (checker.accepts(colors, pos)) ++pos;
  }

  Coloring found(std::move(colors), k);
  if (!verify_lrf(t, found).valid()) throw std::logic_error("search produced a coloring that fails verification");
  return SearchFound{std::move(found), nodes};
}

std::uint64_t brute_force_census(const RootedTree& t, unsigned k, unsigned threads) {
  if (k < 2) throw Error("census needs at least 2 colors, got " + std::to_string(k));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    total *= k;
    if (total > kCensusGuard) {
      throw Error("census of " + std::to_string(k) + "^" + std::to_string(t.size()) +
                  " colorings exceeds guard 2^20");
    }
  }
  auto parts = parallel_chunks(total, threads, [&](std::size_t begin, std::size_t end) {
    std::uint64_t valid = 0;
    std::vector<Color> colors(t.size());
    for (std::size_t code = begin; code < end; ++code) {
      std::size_t rest = code;
      for (std::size_t v = 0; v < t.size(); ++v) {
        colors[v] = static_cast<Color>(rest % k);
        rest /= k;
      }
      if (verify_lrf(t, Coloring(colors, k)).valid()) ++valid;
    }
    return valid;
  });
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

}  // namespace lrf
