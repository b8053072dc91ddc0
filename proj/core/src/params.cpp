#include "hx/params.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace hx {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (long long i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i);
    acc /= static_cast<unsigned __int128>(i);  // divisible: C(n-k+i, i) is integral
    if (acc > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
      throw std::overflow_error("binom(" + std::to_string(n) + "," + std::to_string(k) +
                                ") exceeds long long");
  }
  return static_cast<long long>(acc);
}

long long subset_rank(const int* subset, int k, int n) {
  long long rank = 0;
  int prev = -1;
  for (int pos = 0; pos < k; ++pos) {
    for (int v = prev + 1; v < subset[pos]; ++v)
      rank += binom(n - 1 - v, k - 1 - pos);
    prev = subset[pos];
  }
  return rank;
}

void subset_unrank(long long rank, int n, int k, int* out) {
  int v = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (;; ++v) {
      long long block = binom(n - 1 - v, k - 1 - pos);
      if (rank < block) break;
      rank -= block;
    }
    out[pos] = v++;
  }
}

namespace {

void require(bool ok, const std::string& constraint) {
  if (!ok) throw std::invalid_argument("constraint violated: " + constraint);
}

}  // namespace

long long t_param(long long k, long long r) {
  require(k >= 2, "k >= 2");
  require(r >= 2, "r >= 2");
  // C(t-1, r-1) <= k < C(t, r-1); C(r-1, r-1) = 1 <= k, so start at t = r.
  long long t = r;
  while (binom(t, r - 1) <= k) ++t;
  return t;
}

long long s_param(long long k, long long r) {
  long long t = t_param(k, r);
  // f(s) = k*s - C(s,r) - k is >= 0 at s = t and strictly decreasing for
  // s >= t, so scanning upward from t finds the largest nonnegative point.
  long long s = t;
  while (k + binom(s + 1, r) <= k * (s + 1)) ++s;
  return s;
}

ParamPair params(long long k, long long r) { return {t_param(k, r), s_param(k, r)}; }

BoundQuery make_bound_query(long long n, long long k, long long l, long long r) {
  BoundQuery q;
  q.n = n;
  q.k = k;
  q.l = l;
  q.r = r;
  q.t = t_param(k, r);  // validates k, r >= 2
  q.s = s_param(k, r);
  require(l >= q.t + 1, "l >= t(k,r)+1");
  require(n >= l, "n >= l");
  q.p = n / (l - 1);
  q.q = n % (l - 1);
  q.a = (l + 1) / 2;
  q.b = l / 2;
  return q;
}

std::string to_string(UpperBranch b) {
  switch (b) {
    case UpperBranch::i: return "i";
    case UpperBranch::ii: return "ii";
    default: return "iii";
  }
}

std::string to_string(LowerBranch b) {
  switch (b) {
    case LowerBranch::i: return "i";
    case LowerBranch::ii: return "ii";
    case LowerBranch::iii: return "iii";
    default: return "iv";
  }
}

UpperBound upper_bound(const BoundQuery& q) {
  if (q.l - 1 > q.s) {
    if (q.q > q.s)
      return {q.p * binom(q.l - 1, q.r) + q.p * q.k + binom(q.q, q.r), UpperBranch::i};
    return {q.p * binom(q.l - 1, q.r) + (q.p - 1 + q.q) * q.k, UpperBranch::ii};
  }
  return {binom(q.l - 1, q.r) + (q.n - q.l + 1) * q.k, UpperBranch::iii};
}

LowerBound lower_bound(const BoundQuery& q) {
  const long long defect = (q.t - 1) * q.k - binom(q.t, q.r);  // always >= 0
  if (q.n < 2 * q.t)
    return {binom(q.l - 1, q.r) + (q.n - q.l + 1) * q.k, LowerBranch::i};
  if (q.l <= 2 * q.t)
    return {(q.n - 1) * q.k - defect * (q.n / q.t), LowerBranch::ii};
  if (q.l % 2 == 0) {
    const long long a = q.a;
    return {(q.n - 2 * a + 1) * q.k + 2 * binom(a, q.r) - defect * ((q.n - 2 * a) / q.t),
            LowerBranch::iii};
  }
  const long long b = q.b;
  return {(q.n - 2 * b) * q.k + binom(b, q.r) + binom(b + 1, q.r) -
              defect * ((q.n - 2 * b - 1) / q.t),
          LowerBranch::iv};
}

BoundsReport bounds(const BoundQuery& q) { return {q, lower_bound(q), upper_bound(q)}; }

long long msh_edge_count(long long n, long long k, long long l, long long r) {
  return upper_bound(make_bound_query(n, k, l, r)).edges;
}

KtBounds kt_bounds(long long n, long long k, long long r) {
  const long long t = t_param(k, r);
  require(n >= t, "n >= t(k,r)");
  const long long defect = (t - 1) * k - binom(t, r);
  return {(n - 1) * k - defect * (n / t), binom(t, r) + (n - t) * k};
}

PackingCounts packing_counts(long long n, long long a, long long k, long long r) {
  const long long t = t_param(k, r);
  require(a >= t, "a >= t(k,r)");
  require(n >= a, "n >= a");
  const long long defect = (t - 1) * k - binom(t, r);
  return {(n - 1) * k - defect * (n / t),
          (n - a) * k + binom(a, r) - defect * ((n - a) / t)};
}

long long g_profile(long long n, long long r, long long x) {
  require(r >= 2, "r >= 2");
  require(n >= r, "n >= r");
  require(x >= 1 && x <= n - 1, "1 <= x <= n-1");
  return binom(x, r) + binom(n - x, r);
}

}  // namespace hx
