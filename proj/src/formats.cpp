#include "lrf/formats.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace lrf {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Reads lines, skipping comments and blanks, remembering line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, line_)) {
      ++number_;
      if (!line_.empty() && line_[0] == '#') continue;
      tokens = split(line_);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("line " + std::to_string(number_) + ": " + what);
  }

  template <typename Int>
  Int integer(std::string_view token) const {
    Int value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      fail("invalid integer '" + std::string(token) + "'");
    }
    return value;
  }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t number_ = 0;
};

// Shared body of the two `<id> <value>` formats.
template <typename Fn>
void read_entries(LineReader& reader, std::size_t n, Fn on_entry) {
  std::vector<bool> seen(n, false);
  std::vector<std::string_view> tokens;
  for (std::size_t i = 0; i < n; ++i) {
    if (!reader.next(tokens)) reader.fail("expected " + std::to_string(n) + " entries, found " + std::to_string(i));
    if (tokens.size() != 2) reader.fail("expected '<vertex-id> <value>'");
    const auto id = reader.integer<std::int64_t>(tokens[0]);
    if (id < 0 || static_cast<std::uint64_t>(id) >= n) reader.fail("vertex id " + std::string(tokens[0]) + " out of range");
    if (seen[static_cast<std::size_t>(id)]) reader.fail("duplicate vertex id " + std::string(tokens[0]));
    seen[static_cast<std::size_t>(id)] = true;
    on_entry(static_cast<std::size_t>(id), tokens[1]);
  }
  if (reader.next(tokens)) reader.fail("unexpected trailing content '" + std::string(tokens[0]) + "'");
}

std::string join_ids(const std::vector<VertexId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

}  // namespace

RootedTree read_tree(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens)) reader.fail("empty tree file");
  if (tokens.size() != 2 || tokens[0] != "tree") reader.fail("expected header 'tree <n>'");
  const auto n = reader.integer<std::size_t>(tokens[1]);
  if (n == 0) reader.fail("tree must have at least one vertex");
  if (n >= kNoVertex) reader.fail("vertex count " + std::string(tokens[1]) + " too large");

  std::vector<std::optional<VertexId>> parents(n);
  read_entries(reader, n, [&](std::size_t id, std::string_view value) {
    const auto p = reader.integer<std::int64_t>(value);
    if (p == -1) return;
    if (p < 0 || static_cast<std::uint64_t>(p) >= n) reader.fail("parent id " + std::string(value) + " out of range");
    parents[id] = static_cast<VertexId>(p);
  });
  return RootedTree::from_parents(parents);
}

void write_tree(std::ostream& out, const RootedTree& t) {
  out << "tree " << t.size() << '\n';
  for (VertexId v = 0; v < t.size(); ++v) {
    const auto p = t.parent(v);
    out << v << ' ';
    if (p) {
      out << *p;
    } else {
      out << "-1";
    }
    out << '\n';
  }
}

Coloring read_coloring(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens)) reader.fail("empty coloring file");
  if (tokens.size() != 3 || tokens[0] != "coloring") reader.fail("expected header 'coloring <n> <k>'");
  const auto n = reader.integer<std::size_t>(tokens[1]);
  const auto k = reader.integer<unsigned>(tokens[2]);
  if (k < 2 || k > 10) reader.fail("color count " + std::string(tokens[2]) + " outside 2..10");
  std::vector<Color> colors(n);
  read_entries(reader, n, [&](std::size_t id, std::string_view value) {
    const auto color = reader.integer<unsigned>(value);
    if (color >= k) reader.fail("color " + std::string(value) + " outside 0.." + std::to_string(k - 1));
    colors[id] = static_cast<Color>(color);
  });
  return Coloring(std::move(colors), k);
}

void write_coloring(std::ostream& out, const Coloring& c) {
  out << "coloring " << c.size() << ' ' << c.k << '\n';
  for (std::size_t v = 0; v < c.size(); ++v) out << v << ' ' << static_cast<unsigned>(c.colors[v]) << '\n';
}

void write_edge_list(std::ostream& out, const RootedTree& t) {
  for (VertexId v = 0; v < t.size(); ++v) {
    if (const auto p = t.parent(v)) out << *p << ' ' << v << '\n';
  }
}

void write_certificate(std::ostream& out, const LrfCertificate& cert) {
  if (cert.valid()) {
    out << "verdict: VALID\n";
    return;
  }
  std::string word;
  for (Color c : cert.word) word += static_cast<char>('0' + c);
  out << "verdict: VIOLATION\n"
      << "path: " << join_ids(cert.path) << '\n'
      << "word: " << word << '\n'
      << "offset: " << cert.square.offset << '\n'
      << "period: " << cert.square.period << '\n';
}

LrfCertificate read_certificate(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  auto field = [&](std::string_view key) {
    if (!reader.next(tokens) || tokens.empty() || tokens[0] != std::string(key) + ":") {
      reader.fail("expected field '" + std::string(key) + ":'");
    }
    return std::vector<std::string_view>(tokens.begin() + 1, tokens.end());
  };
  LrfCertificate cert;
  const auto verdict = field("verdict");
  if (verdict.size() == 1 && verdict[0] == "VALID") return cert;
  if (verdict.size() != 1 || verdict[0] != "VIOLATION") reader.fail("verdict must be VALID or VIOLATION");
  cert.verdict = Verdict::kViolation;
  for (auto token : field("path")) cert.path.push_back(reader.integer<VertexId>(token));
  const auto word = field("word");
  if (word.size() != 1) reader.fail("word must be a single token");
  for (char ch : word[0]) {
    if (ch < '0' || ch > '9') reader.fail("invalid color '" + std::string(1, ch) + "' in word");
    cert.word.push_back(static_cast<Color>(ch - '0'));
  }
  for (auto [key, slot] : {std::pair{"offset", &cert.square.offset}, std::pair{"period", &cert.square.period}}) {
    const auto value = field(key);
    if (value.size() != 1) reader.fail(std::string(key) + " takes one integer");
    *slot = reader.integer<std::size_t>(value[0]);
  }
  return cert;
}

void write_embedding(std::ostream& out, const EmbeddedBinaryTree& e, const Coloring& c) {
  for (std::size_t p = 0; p < e.nodes.size(); ++p) {
    out << EmbeddedBinaryTree::address(p) << ' ' << e.nodes[p] << ' ' << static_cast<unsigned>(c[e.nodes[p]])
        << '\n';
  }
}

RootedTree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tree file '" + path + "'");
  try {
    return read_tree(in);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

Coloring load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open coloring file '" + path + "'");
  try {
    return read_coloring(in);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace lrf
