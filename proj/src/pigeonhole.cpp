#include "lrf/pigeonhole.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lrf {

namespace {

constexpr std::uint32_t kNoSignature = std::numeric_limits<std::uint32_t>::max();

// Signatures are interned: id = (own color, id of the chosen children's
// signature), so equal ids mean equal color sequences.
class SignatureTable {
 public:
  std::uint32_t intern(Color color, std::uint32_t below) {
    const std::uint64_t key = (static_cast<std::uint64_t>(color) << 32) | below;
    auto [it, inserted] = ids_.try_emplace(key, static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<std::uint64_t, std::uint32_t> ids_;
};

std::string describe(VertexId v, unsigned depth) {
  return "vertex " + std::to_string(v) + " at depth " + std::to_string(depth);
}

}  // namespace

std::string EmbeddedBinaryTree::address(std::size_t position) {
  if (position == 0) return "-";
  std::string out;
  while (position > 0) {
    out.push_back(position % 2 == 1 ? 'L' : 'R');
    position = (position - 1) / 2;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t EmbeddedBinaryTree::left_chain(unsigned lefts) { return (std::size_t{1} << lefts) - 1; }

ExtractionOutcome extract_binary_subtree(const RootedTree& t, const Coloring& c) {
  c.check_fits(t);
  if (c.k != 2) throw Error("extraction needs a binary coloring, got k=" + std::to_string(c.k));
  const unsigned n = t.height();
  if (n >= 31) throw Error("extraction height " + std::to_string(n) + " exceeds 30");

  SignatureTable table;
  std::vector<std::uint32_t> signature(t.size(), kNoSignature);
  std::vector<std::pair<VertexId, VertexId>> chosen(t.size(), {kNoVertex, kNoVertex});
  std::vector<ExtractionFailure> failures;
  std::vector<std::size_t> failure_of(t.size(), 0);  // index + 1 into failures, 0 = none

  const auto order = t.bfs_order();
  std::vector<std::pair<std::uint32_t, VertexId>> candidates;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId v = *it;
    const unsigned depth = t.depth(v);
    if (depth == n) {
      signature[v] = table.intern(c[v], kNoSignature);
      continue;
    }
    candidates.clear();
    std::size_t first_failed = 0;
    for (VertexId child : t.children(v)) {
      if (signature[child] != kNoSignature) {
        candidates.emplace_back(signature[child], child);
      } else if (first_failed == 0) {
        first_failed = failure_of[child];
      }
    }
    std::sort(candidates.begin(), candidates.end());
    std::pair<VertexId, VertexId> best{kNoVertex, kNoVertex};
    for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
      if (candidates[i].first == candidates[i + 1].first) {
        best = std::min(best, std::pair{candidates[i].second, candidates[i + 1].second});
        // Skip the rest of this group: its smallest pair is already taken.
        while (i + 1 < candidates.size() && candidates[i].first == candidates[i + 1].first) ++i;
      }
    }
    if (best.first != kNoVertex) {
      chosen[v] = best;
      signature[v] = table.intern(c[v], signature[best.first]);
      continue;
    }
    if (candidates.size() < 2 && first_failed != 0) {
      failure_of[v] = first_failed;
      continue;
    }
    std::string why;
    const std::size_t remaining = n - depth;
    if (t.children(v).empty()) {
      why = describe(v, depth) + " has no children but " + std::to_string(remaining) + " levels remain";
    } else {
      why = describe(v, depth) + ": " + std::to_string(candidates.size()) + " of " +
            std::to_string(t.children(v).size()) + " children extracted, no two share a signature";
    }
    failures.push_back(ExtractionFailure{depth, v, std::move(why)});
    failure_of[v] = failures.size();
  }

  const VertexId root = t.root();
  if (signature[root] == kNoSignature) return failures[failure_of[root] - 1];

  EmbeddedBinaryTree e;
  e.height = n;
  e.nodes.assign((std::size_t{1} << (n + 1)) - 1, kNoVertex);
  e.nodes[0] = root;
  const std::size_t internal = (std::size_t{1} << n) - 1;
  for (std::size_t p = 0; p < internal; ++p) {
    const auto [a, b] = chosen[e.nodes[p]];
    e.nodes[EmbeddedBinaryTree::left(p)] = a;
    e.nodes[EmbeddedBinaryTree::right(p)] = b;
  }
  std::vector<Letter> gen(n);
  for (unsigned i = 0; i < n; ++i) gen[i] = c[e.nodes[EmbeddedBinaryTree::left_chain(i)]];
  e.generation_word = Word(std::move(gen));
  return e;
}

bool verify_embedding(const RootedTree& t, const Coloring& c, const EmbeddedBinaryTree& e) {
  const unsigned h = e.height;
  if (h >= 31 || c.size() != t.size()) return false;
  if (e.nodes.size() != (std::size_t{1} << (h + 1)) - 1 || e.generation_word.size() != h) return false;
  if (e.nodes[0] != t.root()) return false;
  for (VertexId v : e.nodes) {
    if (v >= t.size()) return false;
  }
  const std::size_t internal = (std::size_t{1} << h) - 1;
  for (std::size_t p = 0; p < internal; ++p) {
    const VertexId a = e.nodes[EmbeddedBinaryTree::left(p)];
    const VertexId b = e.nodes[EmbeddedBinaryTree::right(p)];
    if (a == b || t.parent(a) != e.nodes[p] || t.parent(b) != e.nodes[p]) return false;
  }
  for (unsigned g = 0; g < h; ++g) {
    const std::size_t begin = EmbeddedBinaryTree::left_chain(g);
    const std::size_t end = EmbeddedBinaryTree::left_chain(g + 1);
    for (std::size_t p = begin; p < end; ++p) {
      if (c[e.nodes[p]] != e.generation_word[g]) return false;
    }
  }
  return true;
}

const char* shape_pattern(ReflectionShape s) {
  switch (s) {
    case ReflectionShape::kFourConstant: return "1111111";
    case ReflectionShape::kFourSplit: return "1221221";
    case ReflectionShape::kFiveConstant: return "111111111";
    case ReflectionShape::kFiveAlternating: return "121212121";
    case ReflectionShape::kFiveCentered: return "112111211";
    case ReflectionShape::kFiveHollow: return "122212221";
  }
  return "";
}

std::optional<ReflectionShape> classify_reflection(const Word& c) {
  if (c.empty()) return std::nullopt;
  std::string pattern(c.size(), '1');
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != c[0]) pattern[i] = '2';
  }
  for (int s = 0; s < 6; ++s) {
    const auto shape = static_cast<ReflectionShape>(s);
    if (pattern == shape_pattern(shape)) return shape;
  }
  return std::nullopt;
}

Reflection reflect_word(const Word& b) {
  if (b.size() < kReflectMinLength) {
    throw Error("generation word '" + b.str() + "' has length " + std::to_string(b.size()) +
                "; a long palindrome is only guaranteed from length 9");
  }
  const auto p = contains_long_palindrome(b);
  if (!p) throw std::logic_error("word of length >= 9 without a long palindrome: " + b.str());
  const std::size_t j = p->offset;
  const std::size_t m = p->length - 1;

  Reflection r;
  r.palindrome = *p;
  r.reflected = b.factor(j + 1, m).reversed() + b.factor(j, m + 1);
  r.square = SquareWitness{0, m};
  if (!is_square_at(r.reflected.letters(), r.square)) {
    throw std::logic_error("reflected word " + r.reflected.str() + " is not a square of period " + std::to_string(m));
  }
  const auto shape = classify_reflection(r.reflected);
  if (!shape) throw std::logic_error("reflected word " + r.reflected.str() + " matches no known shape");
  r.shape = *shape;
  return r;
}

ReflectSweepReport reflect_sweep() {
  ReflectSweepReport report;
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const Word b = Word::from_bits(bits, 9);
    ++report.checked;
    const Reflection r = reflect_word(b);
    const std::size_t m = r.palindrome.length - 1;
    const bool shape_fits = (m == 3) == (r.shape == ReflectionShape::kFourConstant ||
                                         r.shape == ReflectionShape::kFourSplit);
    const bool ok = (m == 3 || m == 4) && r.reflected.size() == 2 * m + 1 && r.square.offset == 0 &&
                    r.square.period == m && is_square_at(r.reflected.letters(), r.square) &&
                    contains_long_square(r.reflected).has_value() && shape_fits;
    if (ok) {
      ++report.verified;
      ++report.shape_counts[static_cast<int>(r.shape)];
    } else {
      report.failures.push_back(b);
    }
  }
  return report;
}

RefuteOutcome refute(const RootedTree& t, const Coloring& c) {
  if (c.k != 2) throw Error("refutation needs a binary coloring, got k=" + std::to_string(c.k));
  auto extracted = extract_binary_subtree(t, c);
  if (auto* failure = std::get_if<ExtractionFailure>(&extracted)) {
    return NotRefuted{"extraction failed at depth " + std::to_string(failure->depth) + " (" +
                      failure->explanation + ")"};
  }
  auto& e = std::get<EmbeddedBinaryTree>(extracted);
  if (e.generation_word.size() < kReflectMinLength) {
    return NotRefuted{"generation word length " + std::to_string(e.generation_word.size()) + " < 9"};
  }

  Refutation out;
  out.reflection = reflect_word(e.generation_word);
  const auto j = static_cast<unsigned>(out.reflection.palindrome.offset);
  const auto m = static_cast<unsigned>(out.reflection.palindrome.length - 1);

  std::vector<VertexId> path;
  for (unsigned i = j + m + 1; i-- > j;) path.push_back(e.nodes[EmbeddedBinaryTree::left_chain(i)]);
  std::size_t pos = EmbeddedBinaryTree::right(EmbeddedBinaryTree::left_chain(j));
  for (unsigned step = 0; step < m; ++step) {
    path.push_back(e.nodes[pos]);
    pos = EmbeddedBinaryTree::left(pos);
  }

  out.certificate.verdict = Verdict::kViolation;
  out.certificate.word.reserve(path.size());
  for (VertexId v : path) out.certificate.word.push_back(c[v]);
  out.certificate.path = std::move(path);
  out.certificate.square = out.reflection.square;
  if (!recheck_certificate(t, c, out.certificate)) {
    throw std::logic_error("refutation certificate failed re-verification");
  }
  out.embedding = std::move(e);
  return out;
}

}  // namespace lrf
