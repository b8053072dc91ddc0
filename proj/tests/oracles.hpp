#pragma once

// Reference implementations used only by tests: small, direct,
// definition-level code kept independent of the library's algorithmic
// paths so the two can cross-check each other.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "hx/hypergraph.hpp"
#include "hx/params.hpp"

namespace oracle {

// Largest t with C(t-1, r-1) <= k, found by scanning every candidate.
inline long long t_by_scan(long long k, long long r) {
  long long best = -1;
  for (long long t = 1; t <= k + r + 2; ++t)
    if (hx::binom(t - 1, r - 1) <= k) best = t;
  return best;
}

// Largest s with k + C(s,r) <= k*s, by scanning every candidate. The
// upper scan limit is generous: C(s,r) outgrows k*s well before it.
inline long long s_by_scan(long long k, long long r) {
  long long best = -1;
  for (long long s = 1; s <= k * r + r + 2; ++s)
    if (k + hx::binom(s, r) <= k * s) best = s;
  return best;
}

inline std::vector<std::uint64_t> edge_masks(const hx::Hypergraph& h) {
  return h.edge_masks();
}

// Edges inside `universe` crossing between `side` and `universe \ side`.
inline long long cut_in_subset(const std::vector<std::uint64_t>& masks, std::uint64_t side,
                               std::uint64_t universe) {
  long long d = 0;
  for (std::uint64_t m : masks)
    if ((m & universe) == m && (m & side) && (m & (universe & ~side))) ++d;
  return d;
}

// kappa' of the subhypergraph induced by `universe`, by minimizing over
// every nonempty proper side (not only sides containing a fixed vertex).
inline long long kappa_in_subset(const std::vector<std::uint64_t>& masks,
                                 std::uint64_t universe) {
  long long best = -1;
  const std::uint64_t low = universe & (~universe + 1);
  const std::uint64_t rest = universe ^ low;
  for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
    for (std::uint64_t side : {sub | low, universe ^ (sub | low)}) {
      if (side == 0 || side == universe) continue;
      const long long d = cut_in_subset(masks, side, universe);
      if (best < 0 || d < best) best = d;
    }
    if (sub == 0) break;
  }
  return best < 0 ? 0 : best;
}

inline long long kappa_by_definition(const hx::Hypergraph& h) {
  const long long n = h.vertex_count();
  if (n < 2) return 0;
  const std::uint64_t universe = (std::uint64_t{1} << n) - 1;
  return kappa_in_subset(edge_masks(h), universe);
}

// Direct admissibility: no Y with |Y| >= l may induce kappa' >= k+1.
inline bool admissible_by_definition(const hx::Hypergraph& h, long long k, long long l) {
  const long long n = h.vertex_count();
  if (n < l) return true;
  const auto masks = edge_masks(h);
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    if (std::popcount(y) < l) continue;
    if (kappa_in_subset(masks, y) >= k + 1) return false;
  }
  return true;
}

// All maximal vertex sets of size >= 2 inducing kappa' >= k+1.
inline std::vector<std::vector<int>> high_sets_by_definition(const hx::Hypergraph& h,
                                                             long long k) {
  const long long n = h.vertex_count();
  const auto masks = edge_masks(h);
  std::vector<std::uint64_t> hits;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    if (std::popcount(y) < 2) continue;
    if (kappa_in_subset(masks, y) >= k + 1) hits.push_back(y);
  }
  std::vector<std::vector<int>> out;
  for (std::uint64_t y : hits) {
    bool maximal = true;
    for (std::uint64_t z : hits)
      if (z != y && (y & z) == y) maximal = false;
    if (!maximal) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (y & (std::uint64_t{1} << v)) vs.push_back(v);
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
