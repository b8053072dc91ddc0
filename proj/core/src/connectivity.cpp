#include "hx/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace hx {

bool side_lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (!diff) return false;
  const std::uint64_t low = diff & (~diff + 1);  // smallest differing vertex
  if (a & low) return (b & ~(low - 1)) != 0;     // a owns it; smaller unless b is a prefix of a
  return (a & ~((low << 1) - 1)) == 0;           // b owns it; a smaller iff a is a prefix of b
}

namespace {

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

CutWitness witness_from_side(const Hypergraph& h, std::uint64_t side_mask,
                             const std::vector<std::uint64_t>& masks) {
  CutWitness w;
  w.side = mask_to_vertices(side_mask);
  for (size_t i = 0; i < masks.size(); ++i)
    if ((masks[i] & side_mask) && (masks[i] & ~side_mask)) w.crossing.push_back(h.edges()[i]);
  w.value = static_cast<long long>(w.crossing.size());
  return w;
}

// Dinic max-flow on the unit-edge-node network. Node layout: vertices
// 0..n-1, then per hyperedge j an in-node n+2j and an out-node n+2j+1
// joined by a capacity-1 arc; incidence arcs are effectively unbounded.
class EdgeDisjointFlow {
 public:
  EdgeDisjointFlow(const Hypergraph& h) : n_(h.vertex_count()) {
    const auto& edges = h.edges();
    node_count_ = n_ + 2 * static_cast<long long>(edges.size());
    head_.assign(node_count_, -1);
    const long long inf = static_cast<long long>(edges.size()) + 1;
    for (size_t j = 0; j < edges.size(); ++j) {
      const long long in = n_ + 2 * static_cast<long long>(j);
      add_arc(in, in + 1, 1);
      for (int v : edges[j]) {
        add_arc(v, in, inf);
        add_arc(in + 1, v, inf);
      }
    }
    initial_cap_ = cap_;
  }

  long long max_flow(long long source, long long sink) {
    cap_ = initial_cap_;
    source_ = source;
    long long total = 0;
    while (bfs(sink)) {
      iter_ = head_;
      while (long long pushed = dfs(source, sink, node_count_ + 1)) total += pushed;
    }
    return total;
  }

  // Vertices reachable from the source in the residual network of the
  // last max_flow call; for a maximal flow this is a minimum-cut side.
  std::vector<int> reachable_vertex_list() const {
    std::vector<char> seen(node_count_, 0);
    std::queue<long long> q;
    q.push(source_);
    seen[source_] = 1;
    while (!q.empty()) {
      long long u = q.front();
      q.pop();
      for (long long a = head_[u]; a >= 0; a = next_[a])
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          q.push(to_[a]);
        }
    }
    std::vector<int> out;
    for (long long v = 0; v < n_; ++v)
      if (seen[v]) out.push_back(static_cast<int>(v));
    return out;
  }

 private:
  void add_arc(long long from, long long to, long long cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<long long>(to_.size()) - 1;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = static_cast<long long>(to_.size()) - 1;
  }

  bool bfs(long long sink) {
    level_.assign(node_count_, -1);
    std::queue<long long> q;
    q.push(source_);
    level_[source_] = 0;
    while (!q.empty()) {
      long long u = q.front();
      q.pop();
      for (long long a = head_[u]; a >= 0; a = next_[a])
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[u] + 1;
          q.push(to_[a]);
        }
    }
    return level_[sink] >= 0;
  }

  long long dfs(long long u, long long sink, long long limit) {
    if (u == sink) return limit;
    for (long long& a = iter_[u]; a >= 0; a = next_[a]) {
      long long v = to_[a];
      if (cap_[a] > 0 && level_[v] == level_[u] + 1) {
        long long pushed = dfs(v, sink, std::min(limit, cap_[a]));
        if (pushed > 0) {
          cap_[a] -= pushed;
          cap_[a ^ 1] += pushed;
          return pushed;
        }
      }
    }
    level_[u] = -1;
    return 0;
  }

  long long n_;
  long long node_count_ = 0;
  long long source_ = 0;
  std::vector<long long> head_, next_, to_, cap_, initial_cap_, level_, iter_;
};

}  // namespace

ConnectivityResult kappa_flow(const Hypergraph& h) {
  const long long n = h.vertex_count();
  if (n < 2) return {0, std::nullopt};
  EdgeDisjointFlow net(h);
  long long best = -1;
  std::vector<int> best_side;
  for (long long v = 1; v < n; ++v) {
    long long f = net.max_flow(0, v);
    if (best < 0 || f < best) {
      best = f;
      best_side = net.reachable_vertex_list();
    }
    if (best == 0) break;
  }
  CutWitness w = cut_value(h, best_side);
  return {best, std::move(w)};
}

ConnectivityResult kappa_oracle(const Hypergraph& h) {
  const long long n = h.vertex_count();
  if (n > kKappaOracleMaxVertices)
    throw std::invalid_argument("kappa_oracle refuses n > " +
                                std::to_string(kKappaOracleMaxVertices) +
                                " (use kappa_flow)");
  if (n < 2) return {0, std::nullopt};
  const auto masks = h.edge_masks();
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  long long best = -1;
  std::uint64_t best_side = 0;
  const std::uint64_t rest_count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t rest = 0; rest + 1 < rest_count; ++rest) {
    const std::uint64_t side = (rest << 1) | 1;  // sides containing vertex 0
    long long d = 0;
    for (std::uint64_t m : masks) d += ((m & side) && (m & full & ~side)) ? 1 : 0;
    if (best < 0 || d < best || (d == best && side_lex_less(side, best_side))) {
      best = d;
      best_side = side;
    }
  }
  return {best, witness_from_side(h, best_side, masks)};
}

ConnectivityResult edge_connectivity(const Hypergraph& h) {
  if (h.vertex_count() <= kKappaOracleMaxVertices) return kappa_oracle(h);
  return kappa_flow(h);
}

std::vector<std::vector<int>> high_components(const Hypergraph& h, long long k) {
  if (k < 0) throw std::invalid_argument("threshold k must be >= 0");
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> work;
  std::vector<int> all(h.vertex_count());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  work.push_back(std::move(all));
  while (!work.empty()) {
    std::vector<int> piece = std::move(work.back());
    work.pop_back();
    if (piece.size() < 2) continue;
    Induced sub = induced(h, piece);
    ConnectivityResult res = edge_connectivity(sub.graph);
    if (res.kappa >= k + 1) {
      out.push_back(std::move(piece));
      continue;
    }
    // Split along the minimum cut: any (k+1)-edge-connected subset lies
    // entirely inside one side, since the crossing edges would otherwise
    // form a cut of value <= k inside it.
    std::vector<char> in_side(sub.graph.vertex_count(), 0);
    for (int v : res.witness->side) in_side[v] = 1;
    std::vector<int> left, right;
    for (long long v = 0; v < sub.graph.vertex_count(); ++v)
      (in_side[v] ? left : right).push_back(sub.to_parent[v]);
    work.push_back(std::move(left));
    work.push_back(std::move(right));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hx
