#include "hx/io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

namespace hx {

namespace {

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<long long> parse_ints(const std::string& line, long long lineno) {
  std::istringstream iss(line);
  std::vector<long long> vals;
  long long v;
  while (iss >> v) vals.push_back(v);
  std::string rest;
  if (iss.clear(), iss >> rest)
    throw ParseError(lineno, "unexpected token '" + rest + "'");
  return vals;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty()) throw ParseError(1, "empty file");
  if (content.back() != '\n') {
    long long lines = 1 + static_cast<long long>(std::count(content.begin(), content.end(), '\n'));
    throw ParseError(lines, "missing trailing newline");
  }

  std::istringstream stream(content);
  std::string line;
  long long lineno = 0;
  long long n = -1, r = -1;
  std::vector<Edge> edges;
  bool header_seen = false;
  while (std::getline(stream, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line) || line[0] == '#') continue;
    auto vals = parse_ints(line, lineno);
    if (!header_seen) {
      if (vals.size() != 2)
        throw ParseError(lineno, "header must be '<n> <r>'");
      n = vals[0];
      r = vals[1];
      if (n < 1) throw ParseError(lineno, "vertex count must be >= 1");
      if (r < 2) throw ParseError(lineno, "uniformity must be >= 2");
      header_seen = true;
      continue;
    }
    if (static_cast<long long>(vals.size()) != r)
      throw ParseError(lineno, "expected " + std::to_string(r) + " vertex ids, got " +
                                   std::to_string(vals.size()));
    Edge e;
    e.reserve(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] < 0 || vals[i] >= n)
        throw ParseError(lineno, "vertex " + std::to_string(vals[i]) + " out of range [0," +
                                     std::to_string(n) + ")");
      if (i > 0 && vals[i] <= vals[i - 1])
        throw ParseError(lineno, "vertex ids must be strictly increasing");
      e.push_back(static_cast<int>(vals[i]));
    }
    edges.push_back(std::move(e));
  }
  if (!header_seen) throw ParseError(lineno, "missing header line");
  try {
    return Hypergraph::build(n, r, std::move(edges));
  } catch (const std::invalid_argument& err) {
    throw ParseError(lineno, err.what());  // duplicate edges, reported at end of input
  }
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.vertex_count() << ' ' << h.uniformity() << '\n';
  for (const auto& e : h.edges()) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_hypergraph(out, h);
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream oss;
  write_hypergraph(oss, h);
  return oss.str();
}

}  // namespace hx
