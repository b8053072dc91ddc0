#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hx/hypergraph.hpp"

namespace hx {

/// Parse failure; line is 1-based and also spelled out in what().
struct ParseError : std::runtime_error {
  ParseError(long long line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
  long long line;
};

/// Canonical text format:
///   line 1: "<n> <r>"
///   each following non-comment line: r strictly increasing vertex ids,
///   single-space separated, lines in lexicographic order
///   '#'-prefixed lines are comments; a trailing newline is required.
/// The reader tolerates comment/blank lines and out-of-order edges and
/// canonicalizes; duplicate edges are an error.
Hypergraph read_hypergraph(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);

/// Writes the canonical form; write(read(x)) == x for canonical x.
void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_hypergraph_file(const std::string& path, const Hypergraph& h);
std::string to_text(const Hypergraph& h);

}  // namespace hx
