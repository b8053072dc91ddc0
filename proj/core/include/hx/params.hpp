#pragma once

#include <string>

namespace hx {

/// Exact binomial coefficient. Returns 0 when k < 0 or k > n (including
/// negative n). Throws std::overflow_error if the value does not fit in
/// long long; all arithmetic is integer-exact, no floating point.
long long binom(long long n, long long k);

/// Rank of a sorted k-subset of {0..n-1} among all k-subsets in
/// lexicographic order, and its inverse.
long long subset_rank(const int* subset, int k, int n);
void subset_unrank(long long rank, int n, int k, int* out);

/// Derived thresholds for attachment-edge count k and uniformity r:
///   t = largest integer with C(t-1, r-1) <= k,
///   s = largest integer with k + C(s, r) <= k*s.
/// Always t <= s.
struct ParamPair {
  long long t = 0;
  long long s = 0;
};

long long t_param(long long k, long long r);
long long s_param(long long k, long long r);
ParamPair params(long long k, long long r);

/// Validated parameter tuple for the size bounds, with the derived
/// decomposition n = p*(l-1) + q (0 <= q < l-1) and the half-split
/// a = ceil(l/2), b = floor(l/2).
struct BoundQuery {
  long long n = 0;
  long long k = 0;
  long long l = 0;
  long long r = 0;
  long long t = 0;
  long long s = 0;
  long long p = 0;
  long long q = 0;
  long long a = 0;
  long long b = 0;
};

/// Builds a BoundQuery, rejecting parameter tuples that violate
/// k, r >= 2 or n >= l >= t(k,r)+1. The thrown message names the
/// violated constraint.
BoundQuery make_bound_query(long long n, long long k, long long l, long long r);

enum class UpperBranch { i, ii, iii };
enum class LowerBranch { i, ii, iii, iv };
std::string to_string(UpperBranch b);
std::string to_string(LowerBranch b);

struct UpperBound {
  long long edges = 0;
  UpperBranch branch = UpperBranch::i;
};
struct LowerBound {
  long long edges = 0;
  LowerBranch branch = LowerBranch::i;
};

/// Maximum edge count of a (k,l)-edge-maximal r-uniform hypergraph on n
/// vertices. Branches:
///   (i)   l-1 > s and q > s:  p*C(l-1,r) + p*k + C(q,r)
///   (ii)  l-1 > s and q <= s: p*C(l-1,r) + (p-1+q)*k
///   (iii) l-1 <= s:           C(l-1,r) + (n-l+1)*k
/// The value equals msh_edge_count for the same parameters.
UpperBound upper_bound(const BoundQuery& q);

/// Minimum edge count of a (k,l)-edge-maximal r-uniform hypergraph on n
/// vertices. Branch selection order: (i) if n < 2t; else (ii) if l <= 2t;
/// else (iii)/(iv) by parity of l.
LowerBound lower_bound(const BoundQuery& q);

struct BoundsReport {
  BoundQuery query;
  LowerBound lower;
  UpperBound upper;
};
BoundsReport bounds(const BoundQuery& q);

/// Edge count shared by every member of the MSH(n;k,l,r) family.
long long msh_edge_count(long long n, long long k, long long l, long long r);

/// Size bounds for the l = t(k,r) case:
///   upper = C(t,r) + (n-t)*k
///   lower = (n-1)*k - ((t-1)*k - C(t,r)) * floor(n/t)
struct KtBounds {
  long long lower = 0;
  long long upper = 0;
};
KtBounds kt_bounds(long long n, long long k, long long r);

/// Edge counts of the two packed-star families (see build_packed_star):
///   count_i  = (n-1)*k - ((t-1)*k - C(t,r)) * floor(n/t)
///   count_ii = (n-a)*k + C(a,r) - ((t-1)*k - C(t,r)) * floor((n-a)/t)
/// Both are always <= C(n,r).
struct PackingCounts {
  long long count_i = 0;
  long long count_ii = 0;
};
PackingCounts packing_counts(long long n, long long a, long long k, long long r);

/// g(x) = C(x,r) + C(n-x,r); monotone non-increasing on 1 <= x <= n/2.
long long g_profile(long long n, long long r, long long x);

}  // namespace hx
