#pragma once

#include <optional>
#include <vector>

#include "hx/hypergraph.hpp"

namespace hx {

/// Global edge-connectivity kappa'(H) with a minimum-cut witness.
/// witness is absent only for n <= 1; kappa = 0 iff H is disconnected
/// or n <= 1, and kappa <= delta(H) always.
struct ConnectivityResult {
  long long kappa = 0;
  std::optional<CutWitness> witness;
};

/// Exact kappa' via max-flow: vertex 0 is the fixed source; for every
/// other vertex v the maximum number of edge-disjoint 0-v paths is
/// computed on a network where each hyperedge becomes a unit-capacity
/// node and vertices connect to their incident edge nodes with unbounded
/// capacity. kappa' is the minimum over v; the witness side is the set of
/// vertices reachable from the source in the final residual network.
ConnectivityResult kappa_flow(const Hypergraph& h);

/// Exact kappa' by direct minimization of d_H(X) over the 2^(n-1)-1
/// sides containing vertex 0. Ties break toward the lexicographically
/// smallest side. Refuses n > kKappaOracleMaxVertices.
ConnectivityResult kappa_oracle(const Hypergraph& h);

inline constexpr long long kKappaOracleMaxVertices = 20;

/// Oracle when it applies, flow otherwise.
ConnectivityResult edge_connectivity(const Hypergraph& h);

/// Maximal vertex subsets (size >= 2) whose induced subhypergraphs have
/// kappa' >= k+1, found by recursively splitting along minimum-cut
/// witnesses. The result is a disjoint family, ordered by smallest
/// member; it is independent of which minimum cuts are used for
/// splitting.
std::vector<std::vector<int>> high_components(const Hypergraph& h, long long k);

/// Lexicographic order on vertex sets encoded as bitmasks (compared as
/// sorted id sequences).
bool side_lex_less(std::uint64_t a, std::uint64_t b);

}  // namespace hx
