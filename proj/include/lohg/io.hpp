#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "lohg/hypergraph.hpp"

namespace lohg {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Instance file (text, line-oriented):
//   c <comment>
//   p lohg <r> <n> <m>
//   e v1 v2 ... vr        (m lines, vertices 1-indexed)
// Colouring file:
//   s lo <k> <n>
//   c1 c2 ... cn          (one line)
// serialize() emits a canonical form (no comments, edges in stored order,
// slots ascending); parse(serialize(x)) == x byte-for-byte on re-serialize.

std::string serialize(const Hypergraph& h);
std::string serialize(const Colouring& c);

Hypergraph parse_hypergraph(std::istream& in);
Colouring parse_colouring(std::istream& in);

Hypergraph parse_hypergraph_string(const std::string& text);
Colouring parse_colouring_string(const std::string& text);

Hypergraph load_hypergraph(const std::string& path);
Colouring load_colouring(const std::string& path);

// write-then-rename so that partial files are never left behind
void write_file_atomic(const std::string& path, const std::string& contents);

} // namespace lohg
