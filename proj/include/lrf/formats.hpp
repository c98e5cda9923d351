#pragma once

#include <iosfwd>
#include <string>

#include "lrf/coloring.hpp"
#include "lrf/pigeonhole.hpp"
#include "lrf/tree.hpp"

namespace lrf {

// Text formats. Parsers throw lrf::Error with the offending line number and
// token; writers produce exactly what the parsers accept.
//
//   tree <n>                coloring <n> <k>
//   <vertex-id> <parent-id> <vertex-id> <color>
//
// A parent id of -1 marks the root. Lines starting with '#' are comments.

RootedTree read_tree(std::istream& in);
void write_tree(std::ostream& out, const RootedTree& t);

Coloring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& c);

/// One `<parent> <child>` line per edge, in child-id order.
void write_edge_list(std::ostream& out, const RootedTree& t);

/// `verdict`, then for violations `path`, `word`, `offset`, `period`.
void write_certificate(std::ostream& out, const LrfCertificate& cert);
LrfCertificate read_certificate(std::istream& in);

/// `<address> <host-vertex-id> <color>` per abstract position, heap order.
void write_embedding(std::ostream& out, const EmbeddedBinaryTree& e, const Coloring& c);

RootedTree load_tree(const std::string& path);
Coloring load_coloring(const std::string& path);

}  // namespace lrf
