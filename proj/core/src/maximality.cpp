#include "hx/maximality.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "hx/connectivity.hpp"
#include "hx/random.hpp"

namespace hx {

namespace {

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

// Decomposition check over bitmasks (n <= 64). Splits along the first cut
// of value <= k found; a violating subset always survives a split intact,
// so only pieces of size >= l that contain `required` need visiting.
// Returns a violating piece mask, or 0 if admissible.
std::uint64_t find_violation_masked(const std::vector<std::uint64_t>& edge_masks,
                                    long long n, long long k, long long l,
                                    std::uint64_t required) {
  if (n < l) return 0;
  const std::uint64_t full = (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::vector<std::uint64_t> work = {full};
  std::vector<std::uint64_t> local;
  while (!work.empty()) {
    const std::uint64_t piece = work.back();
    work.pop_back();
    local.clear();
    for (std::uint64_t m : edge_masks)
      if ((m & piece) == m) local.push_back(m);
    const std::uint64_t low = piece & (~piece + 1);
    const std::uint64_t rest = piece ^ low;
    bool split = false;
    // Sides of `piece` containing its lowest vertex; sub = subset of rest.
    std::uint64_t sub = rest;
    while (true) {
      const std::uint64_t side = sub | low;
      if (side != piece) {
        const std::uint64_t other = piece ^ side;
        long long cut = 0;
        for (std::uint64_t m : local) cut += ((m & side) && (m & other)) ? 1 : 0;
        if (cut <= k) {
          for (std::uint64_t part : {side, other})
            if (std::popcount(part) >= l && (part & required) == required)
              work.push_back(part);
          split = true;
          break;
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    if (!split) return piece;  // kappa'(H[piece]) >= k+1 and |piece| >= l
  }
  return 0;
}

void check_args(long long k, long long l) {
  if (k < 1) throw std::invalid_argument("constraint violated: k >= 1");
  if (l < 2) throw std::invalid_argument("constraint violated: l >= 2");
}

}  // namespace

AdmissibleCheck admissible(const Hypergraph& h, long long k, long long l) {
  check_args(k, l);
  const long long n = h.vertex_count();
  if (n < l) return {true, std::nullopt};
  if (n <= 64) {
    const std::uint64_t bad = find_violation_masked(h.edge_masks(), n, k, l, 0);
    if (!bad) return {true, std::nullopt};
    return {false, mask_to_vertices(bad)};
  }
  // General path for large n: split along minimum-cut witnesses.
  std::vector<std::vector<int>> work;
  std::vector<int> all(n);
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  work.push_back(std::move(all));
  while (!work.empty()) {
    std::vector<int> piece = std::move(work.back());
    work.pop_back();
    if (static_cast<long long>(piece.size()) < l) continue;
    Induced sub = induced(h, piece);
    ConnectivityResult res = edge_connectivity(sub.graph);
    if (res.kappa >= k + 1) return {false, piece};
    std::vector<char> in_side(sub.graph.vertex_count(), 0);
    for (int v : res.witness->side) in_side[v] = 1;
    std::vector<int> left, right;
    for (long long v = 0; v < sub.graph.vertex_count(); ++v)
      (in_side[v] ? left : right).push_back(sub.to_parent[v]);
    work.push_back(std::move(left));
    work.push_back(std::move(right));
  }
  return {true, std::nullopt};
}

AdmissibleCheck admissible_oracle(const Hypergraph& h, long long k, long long l) {
  check_args(k, l);
  const long long n = h.vertex_count();
  if (n > kAdmissibleOracleMaxVertices)
    throw std::invalid_argument("admissible_oracle refuses n > " +
                                std::to_string(kAdmissibleOracleMaxVertices));
  if (n < l) return {true, std::nullopt};

  // inside[S] = number of edges contained in S, via a subset-sum (zeta)
  // transform; then the cut inside Y at side X is
  // inside[Y] - inside[X] - inside[Y\X].
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<int> inside(size, 0);
  for (std::uint64_t m : h.edge_masks()) ++inside[m];
  for (long long b = 0; b < n; ++b)
    for (std::uint64_t s = 0; s < size; ++s)
      if (s & (std::uint64_t{1} << b)) inside[s] += inside[s ^ (std::uint64_t{1} << b)];

  for (std::uint64_t y = 0; y < size; ++y) {
    if (std::popcount(y) < l) continue;
    const std::uint64_t low = y & (~y + 1);
    const std::uint64_t rest = y ^ low;
    bool has_small_cut = false;
    std::uint64_t sub = rest;
    while (true) {
      const std::uint64_t side = sub | low;
      if (side != y &&
          inside[y] - inside[side] - inside[y ^ side] <= k) {
        has_small_cut = true;
        break;
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    if (!has_small_cut) return {false, mask_to_vertices(y)};
  }
  return {true, std::nullopt};
}

namespace {

AdmissibleCheck run_check(const Hypergraph& h, long long k, long long l, VerifyPath path) {
  return path == VerifyPath::oracle ? admissible_oracle(h, k, l) : admissible(h, k, l);
}

}  // namespace

MaximalityReport is_kl_edge_maximal(const Hypergraph& h, long long k, long long l,
                                    VerifyPath path) {
  check_args(k, l);
  MaximalityReport report;
  AdmissibleCheck base = run_check(h, k, l, path);
  report.admissible = base.holds;
  if (!base.holds) {
    report.maximal = false;
    report.violating_subset = std::move(base.violating_subset);
    return report;
  }
  // Admissible; maximal iff no complement edge can be added while staying
  // admissible. For n < l no subset can ever violate, so this reduces to
  // "complete".
  for (const Edge& e : complement_edges(h)) {
    if (run_check(h.with_edge(e), k, l, path).holds) {
      report.maximal = false;
      report.addable_edge = e;
      return report;
    }
  }
  report.maximal = true;
  return report;
}

Hypergraph greedy_maximalize(const Hypergraph& h0, long long k, long long l,
                             std::uint64_t seed) {
  check_args(k, l);
  if (h0.vertex_count() < l)
    throw std::invalid_argument("constraint violated: |V| >= l");
  AdmissibleCheck base = admissible(h0, k, l);
  if (!base.holds) {
    std::string msg = "input violates admissibility; subset {";
    for (size_t i = 0; i < base.violating_subset->size(); ++i) {
      if (i) msg += ",";
      msg += std::to_string((*base.violating_subset)[i]);
    }
    throw std::invalid_argument(msg + "} induces connectivity > k");
  }

  const long long n = h0.vertex_count();
  const bool masked = n <= 64;
  Hypergraph h = h0;
  std::vector<Edge> pool = complement_edges(h);
  std::vector<std::uint64_t> masks = masked ? h.edge_masks() : std::vector<std::uint64_t>{};
  Rng rng(seed);
  while (!pool.empty()) {
    const size_t idx = static_cast<size_t>(rng.below(pool.size()));
    Edge e = std::move(pool[idx]);
    pool[idx] = std::move(pool.back());
    pool.pop_back();
    bool ok;
    if (masked) {
      std::uint64_t em = 0;
      for (int v : e) em |= std::uint64_t{1} << v;
      masks.push_back(em);
      ok = find_violation_masked(masks, n, k, l, em) == 0;
      if (!ok) masks.pop_back();
    } else {
      ok = admissible(h.with_edge(e), k, l).holds;
    }
    if (ok) h = h.with_edge(std::move(e));
    // An edge that breaks admissibility now will keep breaking it as H
    // grows, so it never returns to the pool.
  }
  return h;
}

}  // namespace hx
