#pragma once

#include <vector>

#include "hx/hypergraph.hpp"

namespace hx {

/// A star-like hypergraph: a complete nucleus K_{l-1}^r plus satellites,
/// each a single vertex or a complete K_i^r (r <= i <= l-1) joined to the
/// nucleus by exactly k edges.
struct StarLikeSpec {
  long long k = 2;
  long long r = 2;
  long long l = 0;  // nucleus has l-1 vertices
  std::vector<long long> satellites;
};

/// Deterministic layout: nucleus vertices 0..l-2, then satellites in the
/// given order. Attachment edge j of a size-i satellite consists of satellite
/// vertex (j mod i) plus the j-th (r-1)-subset of the nucleus in
/// lexicographic order, so the k edges are distinct whenever
/// C(l-1, r-1) > k. Rejects satellite sizes in {2..r-1} and nuclei with
/// C(l-1, r-1) <= k.
Hypergraph build_starlike(const StarLikeSpec& spec);

/// The maximum-size star-like family MSH(n;k,l,r):
///   l-1 >  s: p-1 satellites K_{l-1}^r, then one K_q^r if q > s,
///             else q single-vertex satellites (n = p(l-1)+q)
///   l-1 <= s: n-l+1 single-vertex satellites
Hypergraph build_msh(long long n, long long k, long long l, long long r);

/// Lower-bound witness with a two-part nucleus: disjoint K_a^r and K_b^r
/// (a = ceil(l/2), b = floor(l/2)) joined by k edges, plus p satellites
/// K_t^r on n = l + p*t vertices, each attached by k edges that cover all
/// of its vertices and alternate between the two nucleus parts.
/// Requires t > r > 2, k = C(t-1, r-1), k*r >= 2t, l >= 2t+2, p >= 0.
Hypergraph build_dumbbell(long long t, long long r, long long p, long long l);

/// Star-like families realizing the packing_counts edge formulas:
///   count_i:  nucleus K_t,  floor(n/t)-1 K_t satellites,  rest K_1
///   count_ii: nucleus K_a,  floor((n-a)/t) K_t satellites, rest K_1
enum class PackedStarVariant { count_i, count_ii };
Hypergraph build_packed_star(long long n, long long a, long long k, long long r,
                             PackedStarVariant variant);

/// K_n^r (edgeless when n < r).
Hypergraph build_complete(long long n, long long r);

}  // namespace hx
