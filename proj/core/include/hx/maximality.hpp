#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hx/hypergraph.hpp"

namespace hx {

/// Result of the admissibility check: H is admissible for (k,l) when no
/// vertex subset Y with |Y| >= l induces a subhypergraph with
/// kappa' >= k+1. violating_subset is such a Y when the check fails.
struct AdmissibleCheck {
  bool holds = true;
  std::optional<std::vector<int>> violating_subset;
};

/// Decomposition path: recursively split along cuts of value <= k; a
/// piece of size >= l with no such cut is a violation. Pieces smaller
/// than l cannot contain one and are pruned.
AdmissibleCheck admissible(const Hypergraph& h, long long k, long long l);

/// Exhaustive path: enumerate every Y with |Y| >= l and minimize the cut
/// inside Y directly. Refuses n > kAdmissibleOracleMaxVertices.
AdmissibleCheck admissible_oracle(const Hypergraph& h, long long k, long long l);

inline constexpr long long kAdmissibleOracleMaxVertices = 16;

/// Default size cap below which callers engage the exhaustive path.
inline constexpr long long kDefaultOracleEngageCap = 11;

enum class VerifyPath { fast, oracle };

struct MaximalityReport {
  bool admissible = false;
  bool maximal = false;
  std::optional<std::vector<int>> violating_subset;  // present iff not admissible
  std::optional<Edge> addable_edge;  // complement edge whose addition stays admissible
};

/// H is (k,l)-edge-maximal iff it is admissible and adding any complement
/// edge breaks admissibility. For n < l this degenerates to "maximal iff
/// complete". Reports the first addable edge in lexicographic order.
MaximalityReport is_kl_edge_maximal(const Hypergraph& h, long long k, long long l,
                                    VerifyPath path = VerifyPath::fast);

/// Saturates H0 by repeatedly adding a uniformly random complement edge
/// that keeps the hypergraph admissible, until none remains; the result
/// is (k,l)-edge-maximal. Selection draws from the pool of
/// not-yet-rejected candidates (an edge found unaddable stays unaddable,
/// so it is discarded permanently). Deterministic for a fixed seed.
/// Rejects inputs that are not admissible or have fewer than l vertices.
Hypergraph greedy_maximalize(const Hypergraph& h0, long long k, long long l,
                             std::uint64_t seed);

}  // namespace hx
