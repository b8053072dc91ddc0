#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hx/constructions.hpp"

namespace hx {

/// Satellite multiplicities of a star-like hypergraph around a K_{l-1}^r
/// nucleus: count[1] single-vertex satellites and count[i] complete
/// satellites of size i for r <= i <= l-1.
struct SatelliteSpectrum {
  long long k = 2;
  long long r = 2;
  long long l = 0;
  std::vector<long long> count;  // indexed by satellite size; size l

  long long vertex_total() const;  // (l-1) + sum(i * count[i])
  long long edge_count() const;    // C(l-1,r) + sum(count[i] * (k + C(i,r)))

  /// Satellite sizes in construction order (descending size), for
  /// materializing via build_starlike.
  StarLikeSpec to_spec() const;

  bool operator==(const SatelliteSpectrum&) const = default;
};

/// Validates k,r >= 2, l >= t(k,r)+1, counts >= 0 and zero outside
/// {1} and [r, l-1].
SatelliteSpectrum make_spectrum(long long k, long long r, long long l,
                                const std::vector<std::pair<long long, long long>>& counts);

/// Edge-non-decreasing spectrum rewrites:
///   split(i):      one K_i (r <= i <= s) becomes i single vertices;
///                  delta = i*k - (k + C(i,r)) >= 0
///   shift(i,j):    move one vertex from a K_i to a K_j (s < i <= j < l-1);
///                  delta = C(j,r-1) - C(i-1,r-1) >= 0
///   absorb(i0):    a single vertex joins a K_{i0} (s < i0 < l-1);
///                  delta = C(i0,r-1) - k > 0
///   regroup:       count[1] = p1*(l-1)+q1 single vertices become p1
///                  K_{l-1} satellites plus q1 singles (or one K_{q1} if
///                  q1 > s); requires count[1] > s and l-1 > s
struct SpectrumOp {
  enum class Kind { split, shift, absorb, regroup };
  Kind kind = Kind::split;
  long long i = 0;
  long long j = 0;
};
std::string to_string(const SpectrumOp& op);

/// Applies one op after checking its preconditions; returns the rewritten
/// spectrum and the edge delta. Every op preserves vertex_total.
struct OpResult {
  SatelliteSpectrum spectrum;
  long long delta = 0;
};
OpResult apply_op(const SatelliteSpectrum& sp, const SpectrumOp& op);

struct TraceStep {
  SpectrumOp op;
  long long delta = 0;
  long long edges_after = 0;
};

struct NormalizeResult {
  SatelliteSpectrum spectrum;
  std::vector<TraceStep> trace;
};

/// Rewrites to a fixpoint with priority split > shift (smallest i,
/// largest j) > absorb > regroup. Edge counts never decrease along the
/// trace, the vertex total is conserved, and the fixpoint is the
/// MSH(n;k,l,r) spectrum, whose edge count is the upper size bound.
NormalizeResult normalize(const SatelliteSpectrum& sp);

/// The spectrum of MSH(n;k,l,r).
SatelliteSpectrum msh_spectrum(long long n, long long k, long long l, long long r);

/// Seeded random spectrum with the given vertex total.
SatelliteSpectrum random_spectrum(long long n, long long k, long long l, long long r,
                                  std::uint64_t seed);

}  // namespace hx
