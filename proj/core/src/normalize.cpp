#include "hx/normalize.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hx/params.hpp"
#include "hx/random.hpp"

namespace hx {

namespace {

void require(bool ok, const std::string& constraint) {
  if (!ok) throw std::invalid_argument("constraint violated: " + constraint);
}

}  // namespace

long long SatelliteSpectrum::vertex_total() const {
  long long n = l - 1;
  for (size_t i = 0; i < count.size(); ++i) n += static_cast<long long>(i) * count[i];
  return n;
}

long long SatelliteSpectrum::edge_count() const {
  long long e = binom(l - 1, r);
  for (size_t i = 0; i < count.size(); ++i)
    e += count[i] * (k + binom(static_cast<long long>(i), r));
  return e;
}

StarLikeSpec SatelliteSpectrum::to_spec() const {
  StarLikeSpec spec{k, r, l, {}};
  for (long long i = l - 1; i >= 1; --i)
    for (long long c = 0; c < count[i]; ++c) spec.satellites.push_back(i);
  return spec;
}

SatelliteSpectrum make_spectrum(long long k, long long r, long long l,
                                const std::vector<std::pair<long long, long long>>& counts) {
  const long long t = t_param(k, r);
  require(l >= t + 1, "l >= t(k,r)+1");
  SatelliteSpectrum sp{k, r, l, std::vector<long long>(static_cast<size_t>(l), 0)};
  for (auto [size, c] : counts) {
    require(c >= 0, "satellite count >= 0");
    require(size == 1 || (size >= r && size <= l - 1),
            "satellite size must be 1 or in [r, l-1]");
    sp.count[static_cast<size_t>(size)] += c;
  }
  return sp;
}

std::string to_string(const SpectrumOp& op) {
  switch (op.kind) {
    case SpectrumOp::Kind::split: return "split(" + std::to_string(op.i) + ")";
    case SpectrumOp::Kind::shift:
      return "shift(" + std::to_string(op.i) + "," + std::to_string(op.j) + ")";
    case SpectrumOp::Kind::absorb: return "absorb(" + std::to_string(op.i) + ")";
    default: return "regroup";
  }
}

OpResult apply_op(const SatelliteSpectrum& sp, const SpectrumOp& op) {
  const long long s = s_param(sp.k, sp.r);
  SatelliteSpectrum out = sp;
  switch (op.kind) {
    case SpectrumOp::Kind::split: {
      require(op.i >= sp.r && op.i <= s, "split needs r <= i <= s");
      require(op.i <= sp.l - 1 && sp.count[op.i] >= 1, "split needs a K_i satellite");
      out.count[op.i] -= 1;
      out.count[1] += op.i;
      break;
    }
    case SpectrumOp::Kind::shift: {
      require(op.i > s && op.i <= op.j && op.j < sp.l - 1,
              "shift needs s < i <= j < l-1");
      if (op.i == op.j)
        require(sp.count[op.i] >= 2, "shift with i = j needs two K_i satellites");
      else
        require(sp.count[op.i] >= 1 && sp.count[op.j] >= 1,
                "shift needs K_i and K_j satellites");
      out.count[op.i] -= 1;
      out.count[op.i - 1] += 1;
      out.count[op.j] -= 1;
      out.count[op.j + 1] += 1;
      break;
    }
    case SpectrumOp::Kind::absorb: {
      require(op.i > s && op.i < sp.l - 1, "absorb needs s < i0 < l-1");
      require(sp.count[1] >= 1, "absorb needs a single-vertex satellite");
      require(sp.count[op.i] >= 1, "absorb needs a K_i0 satellite");
      out.count[1] -= 1;
      out.count[op.i] -= 1;
      out.count[op.i + 1] += 1;
      break;
    }
    case SpectrumOp::Kind::regroup: {
      require(sp.l - 1 > s, "regroup needs l-1 > s");
      require(sp.count[1] > s, "regroup needs count[1] > s");
      const long long p1 = sp.count[1] / (sp.l - 1);
      const long long q1 = sp.count[1] % (sp.l - 1);
      out.count[sp.l - 1] += p1;
      if (q1 <= s) {
        out.count[1] = q1;
      } else {
        out.count[1] = 0;
        out.count[q1] += 1;
      }
      break;
    }
  }
  return {out, out.edge_count() - sp.edge_count()};
}

NormalizeResult normalize(const SatelliteSpectrum& sp) {
  const long long s = s_param(sp.k, sp.r);
  NormalizeResult result{sp, {}};
  auto& cur = result.spectrum;
  while (true) {
    SpectrumOp op;
    bool found = false;
    for (long long i = sp.r; !found && i <= std::min(s, sp.l - 1); ++i)
      if (cur.count[i] >= 1) {
        op = {SpectrumOp::Kind::split, i, 0};
        found = true;
      }
    if (!found) {
      long long lo = 0, hi = 0, mid_total = 0;
      for (long long i = s + 1; i < sp.l - 1; ++i)
        if (cur.count[i] >= 1) {
          if (!lo) lo = i;
          hi = i;
          mid_total += cur.count[i];
        }
      if (mid_total >= 2) {
        op = {SpectrumOp::Kind::shift, lo, hi};
        found = true;
      } else if (mid_total == 1 && cur.count[1] >= 1) {
        op = {SpectrumOp::Kind::absorb, lo, 0};
        found = true;
      } else if (cur.count[1] > s && sp.l - 1 > s) {
        op = {SpectrumOp::Kind::regroup, 0, 0};
        found = true;
      }
    }
    if (!found) break;
    OpResult step = apply_op(cur, op);
    if (step.delta < 0)
      throw std::logic_error("edge-decreasing rewrite: " + to_string(op));
    cur = std::move(step.spectrum);
    result.trace.push_back({op, step.delta, cur.edge_count()});
  }
  return result;
}

SatelliteSpectrum msh_spectrum(long long n, long long k, long long l, long long r) {
  const BoundQuery q = make_bound_query(n, k, l, r);
  SatelliteSpectrum sp{k, r, l, std::vector<long long>(static_cast<size_t>(l), 0)};
  if (l - 1 > q.s) {
    sp.count[l - 1] = q.p - 1;
    if (q.q > q.s)
      sp.count[q.q] += 1;
    else
      sp.count[1] = q.q;
  } else {
    sp.count[1] = n - l + 1;
  }
  return sp;
}

SatelliteSpectrum random_spectrum(long long n, long long k, long long l, long long r,
                                  std::uint64_t seed) {
  const long long t = t_param(k, r);
  require(l >= t + 1, "l >= t(k,r)+1");
  require(n >= l, "n >= l");
  SatelliteSpectrum sp{k, r, l, std::vector<long long>(static_cast<size_t>(l), 0)};
  Rng rng(seed);
  long long rest = n - (l - 1);
  while (rest > 0) {
    std::vector<long long> sizes = {1};
    for (long long i = r; i <= std::min(l - 1, rest); ++i) sizes.push_back(i);
    const long long pick = sizes[static_cast<size_t>(rng.below(sizes.size()))];
    sp.count[pick] += 1;
    rest -= pick;
  }
  return sp;
}

}  // namespace hx
