#include "hx/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "hx/params.hpp"

namespace hx {

namespace {

void require(bool ok, const std::string& constraint) {
  if (!ok) throw std::invalid_argument("constraint violated: " + constraint);
}

// All r-subsets of {base .. base+count-1}, appended in lexicographic order.
void append_complete(std::vector<Edge>& edges, long long base, long long count, long long r) {
  if (count < r) return;
  Edge cur(r);
  for (long long i = 0; i < r; ++i) cur[i] = static_cast<int>(base + i);
  while (true) {
    edges.push_back(cur);
    long long i = r - 1;
    while (i >= 0 && cur[i] == base + count - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (long long j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
}

// Nucleus K_{nucleus}^r on vertices 0..nucleus-1, satellites appended in
// order, each joined by k attachment edges (satellite vertex j mod size +
// the j-th (r-1)-subset of the nucleus).
Hypergraph star_with_nucleus(long long nucleus, long long k, long long r,
                             const std::vector<long long>& satellite_sizes) {
  require(k >= 2, "k >= 2");
  require(r >= 2, "r >= 2");
  require(binom(nucleus, r - 1) > k, "C(nucleus, r-1) > k");
  for (long long size : satellite_sizes)
    require(size == 1 || (size >= r && size <= nucleus),
            "satellite size must be 1 or in [r, nucleus size]");

  long long n = nucleus;
  for (long long size : satellite_sizes) n += size;

  std::vector<Edge> edges;
  append_complete(edges, 0, nucleus, r);
  std::vector<int> anchor(static_cast<size_t>(r - 1));
  long long offset = nucleus;
  for (long long size : satellite_sizes) {
    append_complete(edges, offset, size, r);
    for (long long j = 0; j < k; ++j) {
      subset_unrank(j, static_cast<int>(nucleus), static_cast<int>(r - 1), anchor.data());
      Edge e(anchor.begin(), anchor.end());
      e.push_back(static_cast<int>(offset + (j % size)));
      edges.push_back(std::move(e));
    }
    offset += size;
  }
  return Hypergraph::build(n, r, std::move(edges));
}

}  // namespace

Hypergraph build_starlike(const StarLikeSpec& spec) {
  require(spec.l >= 2, "l >= 2");
  return star_with_nucleus(spec.l - 1, spec.k, spec.r, spec.satellites);
}

Hypergraph build_msh(long long n, long long k, long long l, long long r) {
  const BoundQuery q = make_bound_query(n, k, l, r);  // validates k,r >= 2, n >= l >= t+1
  std::vector<long long> sizes;
  if (l - 1 > q.s) {
    sizes.assign(static_cast<size_t>(q.p - 1), l - 1);
    if (q.q > q.s)
      sizes.push_back(q.q);
    else
      sizes.insert(sizes.end(), static_cast<size_t>(q.q), 1);
  } else {
    sizes.assign(static_cast<size_t>(n - l + 1), 1);
  }
  return build_starlike({k, r, l, std::move(sizes)});
}

Hypergraph build_dumbbell(long long t, long long r, long long p, long long l) {
  require(r > 2, "r > 2");
  require(t > r, "t > r");
  const long long k = binom(t - 1, r - 1);
  require(k * r >= 2 * t, "k*r >= 2t");
  require(l >= 2 * t + 2, "l >= 2t+2");
  require(p >= 0, "p >= 0");

  const long long a = (l + 1) / 2;
  const long long b = l / 2;
  const long long n = l + p * t;

  std::vector<Edge> edges;
  append_complete(edges, 0, a, r);
  append_complete(edges, a, b, r);

  // Joining and attachment edges; complete-block edges cannot collide with
  // these because every attach() result crosses a block boundary.
  std::set<Edge> used;
  auto add_unique = [&](Edge e) {
    std::sort(e.begin(), e.end());
    require(used.insert(e).second, "attachment edges must be distinct");
    edges.push_back(std::move(e));
  };

  // First unused lexicographic choice-subset completion of a partial edge.
  // Capacity always suffices: the same partial edge repeats at most
  // ceil(k / lcm) times while C(pool, want) choices are available.
  auto attach = [&](const Edge& fixed, long long pool_base, long long pool_size,
                    long long pool_skip, long long want) {
    std::vector<int> pool;
    for (long long v = pool_base; v < pool_base + pool_size; ++v)
      if (v != pool_skip) pool.push_back(static_cast<int>(v));
    const long long total = binom(static_cast<long long>(pool.size()), want);
    std::vector<int> pick(static_cast<size_t>(want));
    for (long long rank = 0; rank < total; ++rank) {
      subset_unrank(rank, static_cast<int>(pool.size()), static_cast<int>(want), pick.data());
      Edge e = fixed;
      for (int idx : pick) e.push_back(pool[idx]);
      std::sort(e.begin(), e.end());
      if (!used.count(e)) {
        add_unique(std::move(e));
        return;
      }
    }
    require(false, "attachment pool exhausted");
  };

  // k edges joining the two nucleus parts: one vertex from each part plus
  // r-2 further K_a vertices.
  for (long long j = 0; j < k; ++j) {
    Edge fixed = {static_cast<int>(j % a), static_cast<int>(a + (j % b))};
    attach(fixed, 0, a, j % a, r - 2);
  }

  // Satellites: every satellite vertex is covered by some attachment
  // edge, and the nucleus ends alternate between the K_a side (even j)
  // and the K_b side (odd j).
  for (long long sat = 0; sat < p; ++sat) {
    const long long base = l + sat * t;
    append_complete(edges, base, t, r);
    for (long long j = 0; j < k; ++j) {
      Edge group;
      if (k <= t) {
        for (long long v = j * t / k; v < (j + 1) * t / k; ++v)
          group.push_back(static_cast<int>(base + v));
      } else {
        group.push_back(static_cast<int>(base + (j % t)));
      }
      const bool a_side = (j % 2 == 0);
      attach(group, a_side ? 0 : a, a_side ? a : b, -1,
             r - static_cast<long long>(group.size()));
    }
  }
  return Hypergraph::build(n, r, std::move(edges));
}

Hypergraph build_packed_star(long long n, long long a, long long k, long long r,
                             PackedStarVariant variant) {
  const long long t = t_param(k, r);
  std::vector<long long> sizes;
  long long nucleus = 0;
  if (variant == PackedStarVariant::count_i) {
    require(n >= t, "n >= t(k,r)");
    nucleus = t;
    sizes.assign(static_cast<size_t>(n / t - 1), t);
    sizes.insert(sizes.end(), static_cast<size_t>(n - t * (n / t)), 1);
  } else {
    require(a >= t, "a >= t(k,r)");
    require(n >= a, "n >= a");
    nucleus = a;
    sizes.assign(static_cast<size_t>((n - a) / t), t);
    sizes.insert(sizes.end(), static_cast<size_t>((n - a) % t), 1);
  }
  return star_with_nucleus(nucleus, k, r, sizes);
}

Hypergraph build_complete(long long n, long long r) {
  require(n >= 1, "n >= 1");
  require(r >= 2, "r >= 2");
  std::vector<Edge> edges;
  append_complete(edges, 0, n, r);
  return Hypergraph::build(n, r, std::move(edges));
}

}  // namespace hx
