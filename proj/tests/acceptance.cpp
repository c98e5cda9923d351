// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lrf/cli.hpp"
#include "lrf/coloring.hpp"
#include "lrf/formats.hpp"
#include "lrf/lemmas.hpp"
#include "lrf/pigeonhole.hpp"
#include "lrf/search.hpp"
#include "lrf/tree.hpp"
#include "support/oracles.hpp"

namespace {

using lrf::Coloring;
using lrf::RootedTree;
using lrf::VertexId;
using lrf::Word;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = lrf::cli::run(args, out, err);
  return {code, out.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

Coloring random_coloring(std::mt19937_64& rng, std::size_t n, unsigned k) {
  std::vector<lrf::Color> colors(n);
  for (auto& c : colors) c = static_cast<lrf::Color>(rng() % k);
  return Coloring(std::move(colors), k);
}

// Rechecks a violation certificate from first principles: the path is a
// simple walk along parent edges, the word is read off the coloring, and
// the square is confirmed by substring comparison.
bool independent_recheck(const RootedTree& t, const Coloring& c, const lrf::LrfCertificate& cert) {
  if (cert.valid() || cert.path.size() != cert.word.size()) return false;
  std::vector<bool> seen(t.size());
  std::string word;
  for (std::size_t i = 0; i < cert.path.size(); ++i) {
    const VertexId v = cert.path[i];
    if (v >= t.size() || seen[v]) return false;
    seen[v] = true;
    if (c[v] != cert.word[i]) return false;
    word += static_cast<char>('0' + c[v]);
    if (i > 0) {
      const VertexId u = cert.path[i - 1];
      if (t.parent(u) != v && t.parent(v) != u) return false;
    }
  }
  const auto sq = oracle::first_long_square(word);
  const std::size_t off = cert.square.offset;
  const std::size_t m = cert.square.period;
  return sq && m >= 3 && off + 2 * m <= word.size() && word.substr(off, m) == word.substr(off + m, m);
}

Outcome palindrome9() {
  const auto r = cli({"lemma", "palindrome9"});
  if (r.code != 0) return {false, "exit " + std::to_string(r.code)};
  if (!has_line(r.out, "result: 512/512 contain long palindrome")) return {false, "unexpected report"};
  return {true, "512/512"};
}

Outcome length8_boundary() {
  const auto r = cli({"word", "census", "--length", "8", "--predicate", "lpf"});
  if (r.code != 0) return {false, "exit " + std::to_string(r.code)};
  // Frozen from the brute-force oracle in the unit tests.
  if (!has_line(r.out, "count: 2")) return {false, "census count changed"};
  if (!has_line(r.out, "00010111")) return {false, "00010111 missing"};
  return {true, "2 words, 00010111 present"};
}

Outcome abxba() {
  const auto r = cli({"lemma", "abxba", "--max", "16"});
  if (r.code != 0) return {false, "exit " + std::to_string(r.code)};
  if (!has_line(r.out, "checked: 131071") || !has_line(r.out, "counterexamples: 0")) return {false, "unexpected report"};
  return {true, "131071 words, 0 counterexamples"};
}

Outcome reduce() {
  const auto r = cli({"color", "reduce", "--word", "00010111", "--height", "7"});
  if (r.code != 0 || !has_line(r.out, "verdict: VALID")) return {false, "reduction not VALID"};
  return {true, "VALID"};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome radius7_trees() {
  const Word a = Word::parse("00010111");
  std::size_t largest = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 2 + rng() % 1999;
    const unsigned depth = 1 + static_cast<unsigned>(rng() % 7);
    // Root somewhere arbitrary first so the center has to be found.
    const auto raw = lrf::random_tree(n, depth, rng());
    const auto shuffled = lrf::reroot(raw, static_cast<VertexId>(rng() % n));
    const auto cr = lrf::center_and_radius(shuffled);
    if (cr.radius > 7) return {false, "seed " + std::to_string(seed) + " radius " + std::to_string(cr.radius)};
    const auto t = lrf::reroot(shuffled, cr.center.front());
    const auto c = lrf::generation_coloring(t, a);
    std::ostringstream tree_text, coloring_text;
    lrf::write_tree(tree_text, t);
    lrf::write_coloring(coloring_text, c);
    std::istringstream tree_in(tree_text.str()), coloring_in(coloring_text.str());
    const auto t2 = lrf::read_tree(tree_in);
    const auto c2 = lrf::read_coloring(coloring_in);
    if (!lrf::verify_lrf(t2, c2).valid()) return {false, "seed " + std::to_string(seed) + " VIOLATION"};
    largest = std::max(largest, n);
  }
  return {true, "100 trees VALID, largest " + std::to_string(largest) + " vertices"};
}

Outcome reflect() {
  const auto r = cli({"lemma", "reflect"});
  if (r.code != 0 || !has_line(r.out, "verified: 512")) return {false, "reflection sweep failed"};
  // Re-verify every reflection independently.
  for (std::uint64_t b = 0; b < 512; ++b) {
    const auto s = oracle::bits(b, 9);
    const auto refl = lrf::reflect_word(Word::parse(s)).reflected.str();
    const auto sq = oracle::first_long_square(refl);
    if (!sq || (sq->second != 3 && sq->second != 4)) return {false, "word " + s};
  }
  return {true, "512/512 squares of period 3 or 4"};
}

Outcome extraction() {
  std::size_t runs = 0;
  auto check = [&](const RootedTree& t, const Coloring& c) {
    ++runs;
    const auto outcome = lrf::extract_binary_subtree(t, c);
    const auto* e = std::get_if<lrf::EmbeddedBinaryTree>(&outcome);
    return e && lrf::verify_embedding(t, c, *e);
  };
  const auto t1 = lrf::build_tyler(lrf::TylerSpec::classic(1));
  for (unsigned bits = 0; bits < 16; ++bits) {
    std::vector<lrf::Color> colors(4);
    for (unsigned v = 0; v < 4; ++v) colors[v] = static_cast<lrf::Color>(bits >> v & 1U);
    if (!check(t1, Coloring(colors, 2))) return {false, "T_1 coloring " + std::to_string(bits)};
  }
  std::mt19937_64 rng(2024);
  const std::pair<unsigned, int> plan[] = {{2, 10000}, {3, 200}, {4, 100}};
  for (const auto& [n, count] : plan) {
    const auto t = lrf::build_tyler(lrf::TylerSpec::classic(n));
    for (int i = 0; i < count; ++i) {
      if (!check(t, random_coloring(rng, t.size(), 2))) return {false, "T_" + std::to_string(n) + " trial " + std::to_string(i)};
    }
  }
  return {true, std::to_string(runs) + " extractions, 0 failures"};
}

Outcome refutation() {
  const auto host = lrf::build_tyler(lrf::TylerSpec{std::vector<std::uint64_t>(9, 3)});
  if (host.size() != 29524) return {false, "host has " + std::to_string(host.size()) + " vertices"};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    const Word a = Word::parse(oracle::random_word(rng, 10));
    const auto c = lrf::generation_coloring(host, a);
    const auto outcome = lrf::refute(host, c);
    const auto* r = std::get_if<lrf::Refutation>(&outcome);
    if (!r) return {false, "seed " + std::to_string(seed) + " not refuted: " + std::get<lrf::NotRefuted>(outcome).reason};
    std::ostringstream text;
    lrf::write_certificate(text, r->certificate);
    std::istringstream in(text.str());
    const auto cert = lrf::read_certificate(in);
    if (!lrf::recheck_certificate(host, c, cert) || !independent_recheck(host, c, cert)) {
      return {false, "seed " + std::to_string(seed) + " certificate rejected"};
    }
  }
  return {true, "20/20 refuted, certificates rechecked"};
}

Outcome search_completeness() {
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + rng() % 14;
    const auto t = RootedTree::from_parents(oracle::random_parents(rng, n));
    const auto result = lrf::search_lrf_coloring(t, 2);
    if (std::holds_alternative<lrf::SearchLimitReached>(result)) return {false, "seed " + std::to_string(seed) + " hit limit"};
    const auto* f = std::get_if<lrf::SearchFound>(&result);
    const auto census = lrf::brute_force_census(t, 2);
    if ((f != nullptr) != (census > 0)) return {false, "seed " + std::to_string(seed) + " disagrees with census"};
    if (f) {
      ++found;
      if (!lrf::verify_lrf_all_pairs(t, f->coloring).valid()) return {false, "seed " + std::to_string(seed) + " FOUND invalid"};
    }
  }
  return {true, std::to_string(found) + " FOUND, " + std::to_string(200 - found) + " unsat, all match census"};
}

Outcome oracle_equivalence() {
  std::size_t violations = 0;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 50;
    const auto t = RootedTree::from_parents(oracle::random_parents(rng, n));
    const auto c = random_coloring(rng, n, i % 5 == 0 ? 3 : 2);
    const auto fast = lrf::verify_lrf(t, c);
    const auto slow = lrf::verify_lrf_all_pairs(t, c);
    if (fast.valid() != slow.valid()) return {false, "instance " + std::to_string(i) + " disagrees"};
    if (!fast.valid()) {
      ++violations;
      if (!lrf::recheck_certificate(t, c, fast)) return {false, "instance " + std::to_string(i) + " bad certificate"};
    }
  }
  return {true, "500 agree (" + std::to_string(violations) + " violations)"};
}

Outcome tyler() {
  const std::uint64_t expected[] = {1, 4, 21};
  for (unsigned n = 0; n < 3; ++n) {
    if (lrf::tyler_vertex_count(n).vertices != expected[n]) return {false, "count for n = " + std::to_string(n)};
  }
  for (unsigned n = 0; n <= 5; ++n) {
    const auto size = lrf::build_tyler(lrf::TylerSpec::classic(n)).size();
    if (size != lrf::tyler_vertex_count(n).vertices) return {false, "build size for n = " + std::to_string(n)};
  }
  return {true, "1, 4, 21; builds match for n <= 5"};
}

// Two timed parts: the reduction within 1 s, the tree cross-check within 30 s.
Outcome reduction_and_trees() {
  auto start = std::chrono::steady_clock::now();
  const auto r = reduce();
  const double reduce_seconds = seconds_since(start);
  if (!r.ok) return r;
  if (reduce_seconds >= 1) return {false, "reduction took " + std::to_string(reduce_seconds) + " s"};
  start = std::chrono::steady_clock::now();
  const auto trees = radius7_trees();
  const double tree_seconds = seconds_since(start);
  if (!trees.ok) return trees;
  if (tree_seconds >= 30) return {false, "tree cross-check took " + std::to_string(tree_seconds) + " s"};
  return {true, "VALID; " + trees.detail};
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"length-9 words contain a long palindrome", 1, palindrome9},
      {"length-8 palindrome-free census", 1, length8_boundary},
      {"abxba sweep up to |x| = 16", 5, abxba},
      {"reduction for 00010111 and radius-7 trees", 31, reduction_and_trees},
      {"reflection of all length-9 words", 1, reflect},
      {"binary subtree extraction on T_1..T_4", 60, extraction},
      {"refutation on ternary height-9 host", 60, refutation},
      {"search completeness on 200 small trees", 120, search_completeness},
      {"maximal-path vs all-pairs verification", 30, oracle_equivalence},
      {"Tyler tree arithmetic", 10, tyler},
  };
  int failures = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = seconds_since(start);
    if (outcome.ok && seconds >= c.limit_seconds) {
      outcome.ok = false;
      outcome.detail += "; over time limit";
    }
    failures += !outcome.ok;
    std::printf("%s %2d  %-42s %8.3f s (limit %g s)  %s\n", outcome.ok ? "PASS" : "FAIL", static_cast<int>(i + 1), c.name, seconds,
                c.limit_seconds, outcome.detail.c_str());
  }
  std::printf("%s: %d failing\n", failures == 0 ? "all criteria pass" : "acceptance failed", failures);
  return failures == 0 ? 0 : 1;
}
