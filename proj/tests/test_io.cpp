#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "hx/constructions.hpp"
#include "hx/io.hpp"
#include "hx/random.hpp"

using namespace hx;

namespace {

Hypergraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

long long parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("canonical text form") {
  CHECK(to_text(build_complete(3, 2)) == "3 2\n0 1\n0 2\n1 2\n");
}

TEST_CASE("write then read is the identity") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Hypergraph h = random_hypergraph(12, 3, 0.3, seed);
    const std::string text = to_text(h);
    const Hypergraph back = parse(text);
    CHECK(back == h);
    CHECK(to_text(back) == text);
  }
  const Hypergraph msh = build_msh(13, 2, 6, 2);
  CHECK(parse(to_text(msh)) == msh);
}

TEST_CASE("reader tolerates comments, blank lines, and unsorted edge lists") {
  const Hypergraph h = parse("# a comment\n3 2\n\n1 2\n0 1\n# tail\n0 2\n");
  CHECK(h == build_complete(3, 2));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("5 2\n0 1 2\n") == 2);       // wrong arity
  CHECK(parse_error_line("3 2\n0 5\n") == 2);         // out of range
  CHECK(parse_error_line("3 2\n1 0\n") == 2);         // not strictly increasing
  CHECK(parse_error_line("3 2\n0 0\n") == 2);         // repeated vertex
  CHECK(parse_error_line("3\n0 1\n") == 1);           // malformed header
  CHECK(parse_error_line("3 2\n0 1\n0 1\n") >= 1);    // duplicate edge
  CHECK(parse_error_line("3 2\n0 1") == 2);           // missing trailing newline
  CHECK(parse_error_line("") == 1);                   // empty file
  CHECK(parse_error_line("# only a comment\n") >= 1); // missing header
  CHECK(parse_error_line("3 2\nx y\n") == 2);         // non-numeric tokens
}

TEST_CASE("file round trip") {
  const std::string path = "io_roundtrip_test.txt";
  const Hypergraph h = build_msh(10, 2, 4, 2);
  write_hypergraph_file(path, h);
  CHECK(read_hypergraph_file(path) == h);
  std::remove(path.c_str());
  CHECK_THROWS(read_hypergraph_file("does_not_exist_anywhere.txt"));
}
