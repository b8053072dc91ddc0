#include "hx/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hx/params.hpp"

namespace hx {

namespace {

std::string edge_text(const Edge& e) {
  std::string s = "{";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "}";
}

void validate_edge(const Edge& e, long long n, long long r) {
  if (static_cast<long long>(e.size()) != r)
    throw std::invalid_argument("edge " + edge_text(e) + " has cardinality " +
                                std::to_string(e.size()) + ", expected " + std::to_string(r));
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] >= n)
      throw std::invalid_argument("edge " + edge_text(e) + " has vertex " +
                                  std::to_string(e[i]) + " out of range [0," +
                                  std::to_string(n) + ")");
    if (i > 0 && e[i] == e[i - 1])
      throw std::invalid_argument("edge " + edge_text(e) + " repeats vertex " +
                                  std::to_string(e[i]));
  }
}

}  // namespace

// Grants the other core modules access to the unvalidated constructor for
// hypergraphs already in canonical form (induced subhypergraphs, parsed
// files, constructions).
struct HypergraphAccess {
  static Hypergraph make(long long n, long long r, std::vector<Edge> edges) {
    return Hypergraph(n, r, std::move(edges));
  }
};

Hypergraph Hypergraph::build(long long n, long long r, std::vector<Edge> edges) {
  if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
  if (r < 2) throw std::invalid_argument("uniformity must be >= 2");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    validate_edge(e, n, r);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw std::invalid_argument("duplicate edge " + edge_text(edges[i]));
  return Hypergraph(n, r, std::move(edges));
}

bool Hypergraph::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Hypergraph Hypergraph::with_edge(Edge e) const {
  std::sort(e.begin(), e.end());
  validate_edge(e, n_, r_);
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (pos != edges_.end() && *pos == e)
    throw std::invalid_argument("duplicate edge " + edge_text(e));
  std::vector<Edge> next = edges_;
  next.insert(next.begin() + (pos - edges_.begin()), std::move(e));
  return Hypergraph(n_, r_, std::move(next));
}

std::vector<std::uint64_t> Hypergraph::edge_masks() const {
  if (n_ > 64) throw std::invalid_argument("edge masks require n <= 64");
  std::vector<std::uint64_t> masks;
  masks.reserve(edges_.size());
  for (const auto& e : edges_) {
    std::uint64_t m = 0;
    for (int v : e) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  return masks;
}

namespace {

std::vector<int> sorted_unique_vertices(const std::vector<int>& vs, long long n,
                                        const char* what) {
  std::vector<int> out = vs;
  std::sort(out.begin(), out.end());
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0 || out[i] >= n)
      throw std::invalid_argument(std::string(what) + " contains vertex " +
                                  std::to_string(out[i]) + " out of range");
    if (i > 0 && out[i] == out[i - 1])
      throw std::invalid_argument(std::string(what) + " repeats vertex " +
                                  std::to_string(out[i]));
  }
  return out;
}

}  // namespace

CutWitness cut_value(const Hypergraph& h, const std::vector<int>& side) {
  std::vector<int> x = sorted_unique_vertices(side, h.vertex_count(), "cut side");
  if (x.empty()) throw std::invalid_argument("cut side must be nonempty");
  if (static_cast<long long>(x.size()) == h.vertex_count())
    throw std::invalid_argument("cut side must be a proper subset");
  std::vector<char> in_side(h.vertex_count(), 0);
  for (int v : x) in_side[v] = 1;
  CutWitness w;
  w.side = std::move(x);
  for (const auto& e : h.edges()) {
    bool hits = false, misses = false;
    for (int v : e) (in_side[v] ? hits : misses) = true;
    if (hits && misses) w.crossing.push_back(e);
  }
  w.value = static_cast<long long>(w.crossing.size());
  return w;
}

Induced induced(const Hypergraph& h, const std::vector<int>& vertices) {
  std::vector<int> ys = sorted_unique_vertices(vertices, h.vertex_count(), "vertex subset");
  std::vector<int> to_new(h.vertex_count(), -1);
  for (size_t i = 0; i < ys.size(); ++i) to_new[ys[i]] = static_cast<int>(i);
  std::vector<Edge> sub;
  for (const auto& e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (int v : e) {
      if (to_new[v] < 0) break;
      mapped.push_back(to_new[v]);
    }
    if (mapped.size() == e.size()) sub.push_back(std::move(mapped));
  }
  // Relabeling is monotone, so both the per-edge order and the edge list
  // order stay canonical.
  return {HypergraphAccess::make(static_cast<long long>(ys.size()), h.uniformity(),
                                 std::move(sub)),
          std::move(ys)};
}

DegreeProfile degrees(const Hypergraph& h) {
  DegreeProfile p;
  p.degree.assign(h.vertex_count(), 0);
  for (const auto& e : h.edges())
    for (int v : e) ++p.degree[v];
  if (!p.degree.empty()) {
    p.min_degree = *std::min_element(p.degree.begin(), p.degree.end());
    p.max_degree = *std::max_element(p.degree.begin(), p.degree.end());
  }
  return p;
}

std::vector<Edge> complement_edges(const Hypergraph& h) {
  const long long n = h.vertex_count();
  const long long r = h.uniformity();
  std::vector<Edge> out;
  if (r > n) return out;
  out.reserve(static_cast<size_t>(binom(n, r) - h.edge_count()));
  Edge cur(r);
  for (long long i = 0; i < r; ++i) cur[i] = static_cast<int>(i);
  while (true) {
    if (!h.has_edge(cur)) out.push_back(cur);
    // next r-subset in lexicographic order
    long long i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (long long j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace hx
