#pragma once

#include <cstdint>
#include <vector>

namespace hx {

/// An edge is a strictly increasing list of vertex ids.
using Edge = std::vector<int>;

/// Immutable r-uniform hypergraph on vertices 0..n-1. Edges are kept
/// duplicate-free and in lexicographic order, so equal hypergraphs have
/// equal representations and serialize identically.
class Hypergraph {
 public:
  /// Validates and canonicalizes the given edge list. Rejects n < 1,
  /// r < 2, edges of the wrong cardinality, out-of-range or repeated
  /// vertex ids, and duplicate edges; the message reports the offending
  /// edge.
  static Hypergraph build(long long n, long long r, std::vector<Edge> edges);

  long long vertex_count() const { return n_; }
  long long uniformity() const { return r_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// e must be sorted.
  bool has_edge(const Edge& e) const;

  /// H + e: a copy with one more edge. Rejects malformed or duplicate e.
  Hypergraph with_edge(Edge e) const;

  /// Edge incidence masks (bit v set iff vertex v is in the edge), in the
  /// same order as edges(). Only valid for n <= 64.
  std::vector<std::uint64_t> edge_masks() const;

  bool operator==(const Hypergraph& other) const = default;

 private:
  friend struct HypergraphAccess;
  Hypergraph(long long n, long long r, std::vector<Edge> edges)
      : n_(n), r_(r), edges_(std::move(edges)) {}

  long long n_ = 0;
  long long r_ = 2;
  std::vector<Edge> edges_;
};

/// One side of an edge cut together with the crossing edges and the cut
/// value d_H(side) = |crossing|.
struct CutWitness {
  std::vector<int> side;
  std::vector<Edge> crossing;
  long long value = 0;
};

/// Cut value of a nonempty proper vertex subset. Rejects empty side,
/// side = V, and invalid vertex lists.
CutWitness cut_value(const Hypergraph& h, const std::vector<int>& side);

/// Subhypergraph induced by a vertex subset, relabeled to 0..|Y|-1 in
/// increasing original order. to_parent maps new ids back to the original
/// ones. Y may be empty.
struct Induced {
  Hypergraph graph;
  std::vector<int> to_parent;
};
Induced induced(const Hypergraph& h, const std::vector<int>& vertices);

struct DegreeProfile {
  std::vector<long long> degree;  // indexed by vertex
  long long min_degree = 0;       // delta(H); 0 when n = 0
  long long max_degree = 0;       // Delta(H); 0 when n = 0
};
DegreeProfile degrees(const Hypergraph& h);

/// All r-subsets of V not present in H, in lexicographic order.
std::vector<Edge> complement_edges(const Hypergraph& h);

}  // namespace hx
