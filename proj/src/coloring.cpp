#include "lrf/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace lrf {

namespace {

// Walks above this size share work between starts through a memo keyed on
// (vertex, came-from, path word); below it the memo costs more than it saves.
constexpr std::size_t kMemoMinVertices = 256;
constexpr std::size_t kMaxPackedLength = 63;

struct WalkState {
  VertexId vertex;
  VertexId from;
  std::uint64_t packed;
  friend bool operator==(const WalkState&, const WalkState&) = default;
};

struct WalkStateHash {
  std::size_t operator()(const WalkState& s) const noexcept {
    std::uint64_t h = s.packed * 0x9E3779B97F4A7C15ULL;
    h ^= (static_cast<std::uint64_t>(s.vertex) << 32 | s.from) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

bool has_suffix_square(std::span<const Color> w) {
  const std::size_t n = w.size();
  for (std::size_t p = kMinSquarePeriod; 2 * p <= n; ++p) {
    if (is_square_at(w, SquareWitness{n - 2 * p, p})) return true;
  }
  return false;
}

std::size_t neighbor_count(const RootedTree& t, VertexId v) { return t.degree(v); }

VertexId neighbor_at(const RootedTree& t, VertexId v, std::size_t i) {
  const auto p = t.parent(v);
  if (p) {
    if (i == 0) return *p;
    --i;
  }
  return t.children(v)[i];
}

bool walk_finds_square(const RootedTree& t, const Coloring& c, std::span<const VertexId> starts) {
  const bool memoize = c.k == 2 && t.size() > kMemoMinVertices;
  std::unordered_set<WalkState, WalkStateHash> seen;

  struct Frame {
    VertexId vertex;
    VertexId from;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::vector<Color> word;
  std::vector<std::uint64_t> packed;

  for (VertexId s : starts) {
    stack.assign(1, Frame{s, kNoVertex, 0});
    word.assign(1, c[s]);
    packed.assign(1, 2U | c[s]);
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == neighbor_count(t, top.vertex)) {
        stack.pop_back();
        word.pop_back();
        packed.pop_back();
        continue;
      }
      const VertexId w = neighbor_at(t, top.vertex, top.next++);
      if (w == top.from) continue;
      const VertexId from = top.vertex;
      word.push_back(c[w]);
      if (has_suffix_square(word)) return true;
      if (memoize && word.size() <= kMaxPackedLength) {
        const std::uint64_t key = (packed.back() << 1) | c[w];
        if (!seen.insert(WalkState{w, from, key}).second) {
          word.pop_back();
          continue;
        }
        packed.push_back(key);
      } else {
        packed.push_back(0);
      }
      stack.push_back(Frame{w, from, 0});
    }
  }
  return false;
}

LrfCertificate violation(std::vector<VertexId> path, std::vector<Color> word, SquareWitness sq) {
  LrfCertificate cert;
  cert.verdict = Verdict::kViolation;
  cert.path = std::move(path);
  cert.word = std::move(word);
  cert.square = sq;
  return cert;
}

}  // namespace

Coloring::Coloring(std::vector<Color> colors_in, unsigned k_in) : colors(std::move(colors_in)), k(k_in) {
  if (k < 2) throw Error("color count must be at least 2, got " + std::to_string(k));
  if (k > 10) throw Error("color count " + std::to_string(k) + " exceeds 10");
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] >= k) {
      throw Error("vertex " + std::to_string(v) + " has color " + std::to_string(colors[v]) +
                  " outside 0.." + std::to_string(k - 1));
    }
  }
}

void Coloring::check_fits(const RootedTree& t) const {
  if (colors.size() != t.size()) {
    throw Error("coloring has " + std::to_string(colors.size()) + " vertices but tree has " +
                std::to_string(t.size()));
  }
}

Coloring generation_coloring(const RootedTree& t, const Word& a) {
  if (a.size() < t.height() + 1) {
    throw Error("word '" + a.str() + "' has " + std::to_string(a.size()) + " letters; tree of height " +
                std::to_string(t.height()) + " needs " + std::to_string(t.height() + 1));
  }
  std::vector<Color> colors(t.size());
  for (VertexId v = 0; v < t.size(); ++v) colors[v] = a[t.depth(v)];
  return Coloring(std::move(colors), 2);
}

std::vector<Color> path_colors(const RootedTree& t, const Coloring& c, VertexId u, VertexId v) {
  c.check_fits(t);
  const auto path = path_between(t, u, v);
  std::vector<Color> word(path.size());
  std::transform(path.begin(), path.end(), word.begin(), [&](VertexId x) { return c[x]; });
  return word;
}

Word path_word(const RootedTree& t, const Coloring& c, VertexId u, VertexId v) {
  if (c.k != 2) throw Error("path word needs a binary coloring, got k=" + std::to_string(c.k));
  return Word(path_colors(t, c, u, v));
}

LrfCertificate verify_lrf(const RootedTree& t, const Coloring& c) {
  c.check_fits(t);
  if (t.size() < 2 * kMinSquarePeriod) return {};

  std::vector<VertexId> endpoints;
  for (VertexId v = 0; v < t.size(); ++v) {
    if (t.degree(v) == 1) endpoints.push_back(v);
  }
  if (!walk_finds_square(t, c, endpoints)) return {};

  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    for (std::size_t j = i + 1; j < endpoints.size(); ++j) {
      auto word = path_colors(t, c, endpoints[i], endpoints[j]);
      if (auto sq = find_long_square(word)) {
        return violation(path_between(t, endpoints[i], endpoints[j]), std::move(word), *sq);
      }
    }
  }
  throw std::logic_error("walk found a long square but no endpoint pair carries one");
}

LrfCertificate verify_lrf_all_pairs(const RootedTree& t, const Coloring& c) {
  c.check_fits(t);
  for (VertexId u = 0; u < t.size(); ++u) {
    for (VertexId v = u + 1; v < t.size(); ++v) {
      auto word = path_colors(t, c, u, v);
      if (auto sq = find_long_square(word)) return violation(path_between(t, u, v), std::move(word), *sq);
    }
  }
  return {};
}

bool recheck_certificate(const RootedTree& t, const Coloring& c, const LrfCertificate& cert) {
  if (cert.verdict != Verdict::kViolation) return false;
  if (c.size() != t.size() || cert.path.empty() || cert.path.size() != cert.word.size()) return false;
  std::vector<bool> on_path(t.size(), false);
  for (std::size_t i = 0; i < cert.path.size(); ++i) {
    const VertexId v = cert.path[i];
    if (v >= t.size() || on_path[v]) return false;
    on_path[v] = true;
    if (i > 0 && !t.adjacent(cert.path[i - 1], v)) return false;
    if (cert.word[i] != c[v]) return false;
  }
  if (cert.square.period < kMinSquarePeriod) return false;
  const std::size_t end = cert.square.offset + 2 * cert.square.period;
  if (end > cert.word.size()) return false;
  for (std::size_t i = 0; i < cert.square.period; ++i) {
    if (cert.word[cert.square.offset + i] != cert.word[cert.square.offset + cert.square.period + i]) return false;
  }
  return true;
}

ReductionReport prop2_reduction(const Word& a, unsigned h) {
  if (a.size() != static_cast<std::size_t>(h) + 1) {
    throw Error("word '" + a.str() + "' has " + std::to_string(a.size()) + " letters, height " +
                std::to_string(h) + " needs exactly " + std::to_string(h + 1));
  }
  ReductionReport report;
  auto record = [&](const Word& w, unsigned k, unsigned i, unsigned j, bool monotone) {
    if (auto sq = contains_long_square(w)) {
      report.valid = false;
      report.violations.push_back(TurnWordViolation{k, i, j, monotone, w, *sq});
    }
  };
  for (unsigned k = 0; k <= h; ++k) {
    for (unsigned i = k; i <= h; ++i) {
      ++report.monotone_factors;
      record(a.factor(k, i - k + 1), k, i, k, true);
    }
  }
  for (unsigned k = 0; k < h; ++k) {
    for (unsigned i = k + 1; i <= h; ++i) {
      const Word climb = a.factor(k, i - k + 1).reversed();
      for (unsigned j = k + 1; j <= h; ++j) {
        ++report.turn_words;
        record(climb + a.factor(k + 1, j - k), k, i, j, false);
      }
    }
  }
  return report;
}

Broom broom_for_turn(unsigned turn_depth, unsigned from_depth, unsigned to_depth) {
  const bool monotone = to_depth == turn_depth;
  if (from_depth < turn_depth || (!monotone && (from_depth == turn_depth || to_depth < turn_depth))) {
    throw Error("turn depths must satisfy k < i and k < j (or j = k for a monotone factor)");
  }
  // Chain 0..from_depth, vertex id = depth.
  std::vector<std::optional<VertexId>> parents(from_depth + 1);
  for (unsigned d = 1; d <= from_depth; ++d) parents[d] = d - 1;
  Broom out{RootedTree{}, from_depth, turn_depth};
  if (!monotone) {
    VertexId prev = turn_depth;
    for (unsigned d = turn_depth + 1; d <= to_depth; ++d) {
      parents.emplace_back(prev);
      prev = static_cast<VertexId>(parents.size() - 1);
    }
    out.second = prev;
  }
  out.tree = RootedTree::from_parents(parents);
  return out;
}

}  // namespace lrf
