#include "lrf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "lrf/coloring.hpp"
#include "lrf/formats.hpp"
#include "lrf/lemmas.hpp"
#include "lrf/pigeonhole.hpp"
#include "lrf/search.hpp"
#include "lrf/tree.hpp"
#include "lrf/word.hpp"

namespace lrf::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

template <typename T>
std::string join(const std::vector<T>& items) {
  std::ostringstream s;
  for (std::size_t i = 0; i < items.size(); ++i) s << (i ? " " : "") << items[i];
  return s.str();
}

std::string join_words(const std::vector<Word>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) out += (i ? " " : "") + words[i].str();
  return out;
}

// Writes to `path`, or to `fallback` when the path is empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot open output file '" + path + "'");
  body(file);
  if (!file) throw Error("failed writing output file '" + path + "'");
}

std::vector<std::uint64_t> parse_fanout(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw Error("invalid fanout entry '" + item + "' in '" + text + "'");
    }
    out.push_back(std::stoull(item));
  }
  return out;
}

struct Options {
  unsigned threads = 1;
  std::uint64_t seed = 0;

  std::string word;
  std::size_t length = 0;
  std::string predicate = "lpf";
  std::size_t max_x = 16;

  std::string tree_file;
  std::string coloring_file;
  std::string out_file;
  std::string edges_file;
  std::string dump_file;
  unsigned height = 0;
  std::string fanout;
  std::uint64_t guard = kDefaultSizeGuard;
  std::size_t vertices = 1;
  unsigned max_depth = 7;
  unsigned colors = 2;
  std::uint64_t limit = kDefaultNodeLimit;
  bool all_pairs = false;
};

int word_check(const Options& o, std::ostream& out) {
  const Word w = Word::parse(o.word);
  const auto sq = contains_long_square(w);
  const auto pal = contains_long_palindrome(w);
  out << "word: " << w.str() << '\n' << "length: " << w.size() << '\n';
  out << "long-square-free: " << yes_no(!sq) << '\n';
  if (sq) out << "long-square: offset " << sq->offset << " period " << sq->period << '\n';
  out << "long-palindrome-free: " << yes_no(!pal) << '\n';
  if (pal) out << "long-palindrome: offset " << pal->offset << " length " << pal->length << '\n';
  return sq ? kExitFails : kExitHolds;
}

int word_census(const Options& o, std::ostream& out) {
  if (o.predicate != "lsf" && o.predicate != "lpf") throw Error("unknown predicate '" + o.predicate + "'");
  const auto words = o.predicate == "lsf" ? lsf_census(o.length, o.threads) : lpf_census(o.length, o.threads);
  out << "predicate: " << o.predicate << '\n' << "length: " << o.length << '\n' << "count: " << words.size() << '\n';
  for (const auto& w : words) out << w.str() << '\n';
  return words.empty() ? kExitFails : kExitHolds;
}

int lemma_abxba(const Options& o, std::ostream& out) {
  const auto r = check_lemma_abxba(o.max_x, o.threads);
  out << "lemma: abxba\n"
      << "max-x-length: " << r.max_x_len << '\n'
      << "checked: " << r.checked << '\n'
      << "counterexamples: " << r.counterexamples.size() << '\n';
  for (const auto& w : r.counterexamples) out << "counterexample: " << w.str() << '\n';
  out << "result: " << (r.holds() ? "holds" : "fails") << '\n';
  return r.holds() ? kExitHolds : kExitFails;
}

int lemma_palindrome9(std::ostream& out) {
  const auto r = check_lemma_palindrome9();
  const bool boundary =
      std::find(r.length8_free.begin(), r.length8_free.end(), Word::parse("00010111")) != r.length8_free.end();
  out << "lemma: palindrome9\n"
      << "checked: " << r.checked << '\n'
      << "with-long-palindrome: " << r.with_long_palindrome << '\n'
      << "result: " << r.with_long_palindrome << '/' << r.checked << " contain long palindrome\n"
      << "length9-palindrome-free: " << r.length9_free.size() << '\n'
      << "length8-palindrome-free: " << r.length8_free.size() << '\n'
      << "length8-words: " << join_words(r.length8_free) << '\n'
      << "third-condition-redundant: " << yes_no(r.third_condition_redundant) << '\n';
  return r.holds() && boundary ? kExitHolds : kExitFails;
}

int lemma_reflect(std::ostream& out) {
  const auto r = reflect_sweep();
  out << "lemma: reflect\n" << "checked: " << r.checked << '\n' << "verified: " << r.verified << '\n';
  for (int s = 0; s < 6; ++s) {
    out << "shape-" << shape_pattern(static_cast<ReflectionShape>(s)) << ": " << r.shape_counts[s] << '\n';
  }
  for (const auto& w : r.failures) out << "failure: " << w.str() << '\n';
  out << "result: " << (r.holds() ? "holds" : "fails") << '\n';
  return r.holds() ? kExitHolds : kExitFails;
}

int tree_info(const Options& o, std::ostream& out) {
  const auto t = load_tree(o.tree_file);
  const auto cr = center_and_radius(t);
  out << "vertices: " << t.size() << '\n'
      << "root: " << t.root() << '\n'
      << "height: " << t.height() << '\n'
      << "radius: " << cr.radius << '\n'
      << "center: " << join(cr.center) << '\n'
      << "generation-sizes: " << join(t.generation_sizes()) << '\n';
  if (!o.edges_file.empty()) emit(o.edges_file, out, [&](std::ostream& s) { write_edge_list(s, t); });
  return kExitHolds;
}

int tree_tyler(const Options& o, std::ostream& out) {
  TylerSpec spec = TylerSpec::classic(o.height);
  if (!o.fanout.empty()) {
    spec.fanout = parse_fanout(o.fanout);
    if (spec.height() != o.height) {
      throw Error("--fanout lists " + std::to_string(spec.height()) + " entries but --height is " +
                  std::to_string(o.height));
    }
  }
  const auto t = build_tyler(spec, o.guard);
  emit(o.out_file, out, [&](std::ostream& s) { write_tree(s, t); });
  if (!o.edges_file.empty()) emit(o.edges_file, out, [&](std::ostream& s) { write_edge_list(s, t); });
  return kExitHolds;
}

int tree_count(const Options& o, std::ostream& out) {
  const auto c = tyler_vertex_count(o.height);
  out << "height: " << o.height << '\n' << "vertices: " << c.vertices << '\n' << "subtrees: " << c.subtrees << '\n';
  return kExitHolds;
}

int tree_random(const Options& o, std::ostream& out) {
  const auto t = random_tree(o.vertices, o.max_depth, o.seed);
  emit(o.out_file, out, [&](std::ostream& s) { write_tree(s, t); });
  return kExitHolds;
}

int color_apply(const Options& o, std::ostream& out) {
  const auto t = load_tree(o.tree_file);
  const auto c = generation_coloring(t, Word::parse(o.word));
  emit(o.out_file, out, [&](std::ostream& s) { write_coloring(s, c); });
  return kExitHolds;
}

int color_random(const Options& o, std::ostream& out) {
  if (o.colors < 2 || o.colors > 10) throw Error("--colors " + std::to_string(o.colors) + " outside 2..10");
  const auto t = load_tree(o.tree_file);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<unsigned> pick(0, o.colors - 1);
  std::vector<Color> colors(t.size());
  for (auto& c : colors) c = static_cast<Color>(pick(rng));
  const Coloring c(std::move(colors), o.colors);
  emit(o.out_file, out, [&](std::ostream& s) { write_coloring(s, c); });
  return kExitHolds;
}

int color_verify(const Options& o, std::ostream& out) {
  const auto t = load_tree(o.tree_file);
  const auto c = load_coloring(o.coloring_file);
  c.check_fits(t);
  const auto cert = o.all_pairs ? verify_lrf_all_pairs(t, c) : verify_lrf(t, c);
  write_certificate(out, cert);
  return cert.valid() ? kExitHolds : kExitFails;
}

int color_reduce(const Options& o, std::ostream& out) {
  const auto r = prop2_reduction(Word::parse(o.word), o.height);
  out << "verdict: " << (r.valid ? "VALID" : "VIOLATION") << '\n'
      << "turn-words: " << r.turn_words << '\n'
      << "monotone-factors: " << r.monotone_factors << '\n'
      << "violations: " << r.violations.size() << '\n';
  if (!r.violations.empty()) {
    const auto& v = r.violations.front();
    out << "first-violation: " << v.word.str() << '\n'
        << "kind: " << (v.monotone ? "monotone" : "turn") << '\n'
        << "turn-depth: " << v.turn_depth << '\n'
        << "from-depth: " << v.from_depth << '\n'
        << "to-depth: " << v.to_depth << '\n'
        << "offset: " << v.square.offset << '\n'
        << "period: " << v.square.period << '\n';
  }
  return r.valid ? kExitHolds : kExitFails;
}

int color_search(const Options& o, std::ostream& out, std::ostream& err) {
  const auto t = load_tree(o.tree_file);
  const auto result = search_lrf_coloring(t, o.colors, o.limit);
  if (const auto* found = std::get_if<SearchFound>(&result)) {
    err << "nodes-explored: " << found->nodes_explored << '\n';
    emit(o.out_file, out, [&](std::ostream& s) { write_coloring(s, found->coloring); });
    return kExitHolds;
  }
  if (const auto* none = std::get_if<SearchExhausted>(&result)) {
    out << "unsat " << none->nodes_explored << '\n';
    return kExitFails;
  }
  out << "limit " << std::get<SearchLimitReached>(result).nodes_explored << '\n';
  return kExitFails;
}

int color_census(const Options& o, std::ostream& out) {
  const auto t = load_tree(o.tree_file);
  const auto valid = brute_force_census(t, o.colors, o.threads);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < t.size(); ++i) total *= o.colors;
  out << "colors: " << o.colors << '\n' << "colorings: " << total << '\n' << "valid: " << valid << '\n';
  return valid > 0 ? kExitHolds : kExitFails;
}

int run_refute(const Options& o, std::ostream& out) {
  const auto t = load_tree(o.tree_file);
  const auto c = load_coloring(o.coloring_file);
  c.check_fits(t);
  const auto outcome = refute(t, c);
  if (const auto* no = std::get_if<NotRefuted>(&outcome)) {
    out << "verdict: NOT-REFUTED\n" << "reason: " << no->reason << '\n';
    return kExitFails;
  }
  const auto& r = std::get<Refutation>(outcome);
  write_certificate(out, r.certificate);
  out << "generation-word: " << r.embedding.generation_word.str() << '\n'
      << "palindrome-offset: " << r.reflection.palindrome.offset << '\n'
      << "palindrome-length: " << r.reflection.palindrome.length << '\n'
      << "shape: " << shape_pattern(r.reflection.shape) << '\n';
  if (!o.dump_file.empty()) emit(o.dump_file, out, [&](std::ostream& s) { write_embedding(s, r.embedding, c); });
  return kExitFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Long-square-free words and long-repetition-free tree colorings", "lrf"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "Worker threads for exhaustive sweeps")->check(CLI::Range(1U, 256U));

  auto* word = app.add_subcommand("word", "Word predicates");
  word->require_subcommand(1);
  auto* word_check_cmd = word->add_subcommand("check", "Long-square and long-palindrome report for one word");
  word_check_cmd->add_option("word", o.word, "Word over 0/1 (may be empty)")->required();
  auto* word_census_cmd = word->add_subcommand("census", "Enumerate words satisfying a predicate");
  word_census_cmd->add_option("--length", o.length)->required();
  word_census_cmd->add_option("--predicate", o.predicate, "lsf or lpf")->check(CLI::IsMember({"lsf", "lpf"}));

  auto* lemma = app.add_subcommand("lemma", "Exhaustive lemma sweeps");
  lemma->require_subcommand(1);
  auto* abxba_cmd = lemma->add_subcommand("abxba", "Every 01x10 contains a long palindrome");
  abxba_cmd->add_option("--max", o.max_x, "Maximum length of x")->required();
  auto* pal9_cmd = lemma->add_subcommand("palindrome9", "Every length-9 word contains a long palindrome");
  auto* reflect_cmd = lemma->add_subcommand("reflect", "Reflection of all 512 length-9 words");

  auto* tree = app.add_subcommand("tree", "Tree construction and queries");
  tree->require_subcommand(1);
  auto* info_cmd = tree->add_subcommand("info", "Size, height, radius, center, generation sizes");
  info_cmd->add_option("treefile", o.tree_file)->required();
  info_cmd->add_option("--edges", o.edges_file, "Also write '<parent> <child>' edge list");
  auto* tyler_cmd = tree->add_subcommand("tyler", "Build a Tyler tree");
  tyler_cmd->add_option("--height", o.height)->required();
  tyler_cmd->add_option("--fanout", o.fanout, "Comma-separated children per depth");
  tyler_cmd->add_option("--guard", o.guard, "Maximum vertex count");
  tyler_cmd->add_option("--out", o.out_file);
  tyler_cmd->add_option("--edges", o.edges_file);
  auto* count_cmd = tree->add_subcommand("count", "Exact Tyler tree vertex count");
  count_cmd->add_option("--height", o.height)->required();
  auto* random_tree_cmd = tree->add_subcommand("random", "Seeded random rooted tree");
  random_tree_cmd->add_option("--vertices", o.vertices)->required();
  random_tree_cmd->add_option("--max-depth", o.max_depth);
  random_tree_cmd->add_option("--seed", o.seed);
  random_tree_cmd->add_option("--out", o.out_file);

  auto* color = app.add_subcommand("color", "Colorings of trees");
  color->require_subcommand(1);
  auto* apply_cmd = color->add_subcommand("apply", "Generation coloring from a word");
  apply_cmd->add_option("--word", o.word)->required();
  apply_cmd->add_option("treefile", o.tree_file)->required();
  apply_cmd->add_option("--out", o.out_file);
  auto* verify_cmd = color->add_subcommand("verify", "Long-repetition-free check with certificate");
  verify_cmd->add_option("treefile", o.tree_file)->required();
  verify_cmd->add_option("coloringfile", o.coloring_file)->required();
  verify_cmd->add_flag("--all-pairs", o.all_pairs, "Use the all-pairs oracle");
  auto* reduce_cmd = color->add_subcommand("reduce", "Turn-word reduction for generation colorings");
  reduce_cmd->add_option("--word", o.word)->required();
  reduce_cmd->add_option("--height", o.height)->required();
  auto* search_cmd = color->add_subcommand("search", "Complete backtracking search");
  search_cmd->add_option("treefile", o.tree_file)->required();
  search_cmd->add_option("--colors", o.colors)->required();
  search_cmd->add_option("--limit", o.limit);
  search_cmd->add_option("--out", o.out_file);
  auto* census_cmd = color->add_subcommand("census", "Count valid colorings by brute force");
  census_cmd->add_option("treefile", o.tree_file)->required();
  census_cmd->add_option("--colors", o.colors)->required();
  auto* random_color_cmd = color->add_subcommand("random", "Seeded uniform random coloring");
  random_color_cmd->add_option("treefile", o.tree_file)->required();
  random_color_cmd->add_option("--colors", o.colors);
  random_color_cmd->add_option("--seed", o.seed);
  random_color_cmd->add_option("--out", o.out_file);

  auto* refute_cmd = app.add_subcommand("refute", "Pigeonhole extraction and reflection refutation");
  refute_cmd->add_option("treefile", o.tree_file)->required();
  refute_cmd->add_option("coloringfile", o.coloring_file)->required();
  refute_cmd->add_option("--dump", o.dump_file, "Write the embedded binary tree");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  try {
    if (*word_check_cmd) return word_check(o, out);
    if (*word_census_cmd) return word_census(o, out);
    if (*abxba_cmd) return lemma_abxba(o, out);
    if (*pal9_cmd) return lemma_palindrome9(out);
    if (*reflect_cmd) return lemma_reflect(out);
    if (*info_cmd) return tree_info(o, out);
    if (*tyler_cmd) return tree_tyler(o, out);
    if (*count_cmd) return tree_count(o, out);
    if (*random_tree_cmd) return tree_random(o, out);
    if (*apply_cmd) return color_apply(o, out);
    if (*verify_cmd) return color_verify(o, out);
    if (*reduce_cmd) return color_reduce(o, out);
    if (*search_cmd) return color_search(o, out, err);
    if (*census_cmd) return color_census(o, out);
    if (*random_color_cmd) return color_random(o, out);
    if (*refute_cmd) return run_refute(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: no subcommand given\n";
  return kExitUsage;
}

}  // namespace lrf::cli
