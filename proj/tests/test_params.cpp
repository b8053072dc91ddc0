#include <doctest.h>

#include <vector>

#include "hx/params.hpp"
#include "oracles.hpp"

using namespace hx;

TEST_CASE("binomial coefficients are exact and vanish for k > n") {
  CHECK(binom(4, 3) == 4);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(40, 6) == 3838380);

  // Pascal-triangle cross-check.
  std::vector<std::vector<long long>> tri(31);
  for (int n = 0; n <= 30; ++n) {
    tri[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) tri[n][k] = tri[n - 1][k - 1] + tri[n - 1][k];
    for (int k = 0; k <= n; ++k) CHECK(binom(n, k) == tri[n][k]);
  }
}

TEST_CASE("subset rank and unrank agree with lexicographic enumeration") {
  std::vector<int> prev;
  for (long long rank = 0; rank < binom(8, 3); ++rank) {
    std::vector<int> cur(3);
    subset_unrank(rank, 8, 3, cur.data());
    CHECK(subset_rank(cur.data(), 3, 8) == rank);
    if (!prev.empty()) CHECK(prev < cur);
    prev = cur;
  }
}

TEST_CASE("threshold t") {
  CHECK(t_param(2, 2) == 3);  // C(2,1)=2 <= 2 < C(3,1)=3
  CHECK(t_param(3, 3) == 4);  // C(3,2)=3 <= 3 < C(4,2)=6
  CHECK(t_param(2, 3) == 3);  // C(2,2)=1 <= 2 < C(3,2)=3
  CHECK_THROWS(t_param(1, 2));
  CHECK_THROWS(t_param(2, 1));
}

TEST_CASE("threshold s") {
  CHECK(s_param(2, 2) == 4);  // 2+6=8 <= 8; 2+10=12 > 10
  CHECK(s_param(3, 3) == 5);  // 3+10=13 <= 15; 3+20=23 > 18
  CHECK(s_param(2, 3) == 4);  // 2+4=6 <= 8; 2+10=12 > 10
}

TEST_CASE("thresholds match the exhaustive scans and satisfy t <= s") {
  for (long long k = 2; k <= 12; ++k)
    for (long long r = 2; r <= 12; ++r) {
      const ParamPair pp = params(k, r);
      CHECK(pp.t == oracle::t_by_scan(k, r));
      CHECK(pp.s == oracle::s_by_scan(k, r));
      CHECK(pp.t <= pp.s);
      CHECK(binom(pp.t - 1, r - 1) <= k);
      CHECK(binom(pp.t, r - 1) > k);
      CHECK((pp.t - 1) * k - binom(pp.t, r) >= 0);
    }
}

TEST_CASE("bound query validation") {
  CHECK_THROWS(make_bound_query(3, 2, 4, 2));   // n < l
  CHECK_THROWS(make_bound_query(10, 2, 3, 2));  // l < t+1 = 4
  CHECK_THROWS(make_bound_query(10, 1, 4, 2));
  CHECK_THROWS(make_bound_query(10, 2, 4, 1));
  const BoundQuery q = make_bound_query(13, 2, 6, 2);
  CHECK(q.p == 2);
  CHECK(q.q == 3);
  CHECK(q.a == 3);
  CHECK(q.b == 3);
}

TEST_CASE("upper bound branches") {
  auto u1 = upper_bound(make_bound_query(10, 2, 4, 2));
  CHECK(u1.edges == 17);  // 3 + 7*2
  CHECK(u1.branch == UpperBranch::iii);

  auto u2 = upper_bound(make_bound_query(13, 2, 6, 2));
  CHECK(u2.edges == 28);  // 2*10 + 4*2
  CHECK(u2.branch == UpperBranch::ii);

  auto u3 = upper_bound(make_bound_query(17, 2, 7, 2));
  CHECK(u3.edges == 44);  // 2*15 + 2*2 + 10
  CHECK(u3.branch == UpperBranch::i);
}

TEST_CASE("lower bound branches") {
  auto l1 = lower_bound(make_bound_query(5, 2, 4, 2));
  CHECK(l1.edges == 7);  // 3 + 2*2
  CHECK(l1.branch == LowerBranch::i);

  auto l2 = lower_bound(make_bound_query(10, 2, 4, 2));
  CHECK(l2.edges == 15);  // 9*2 - 1*3
  CHECK(l2.branch == LowerBranch::ii);

  auto l3 = lower_bound(make_bound_query(14, 3, 10, 3));
  CHECK(l3.edges == 30);  // 5*3 + 2*10 - 5*1
  CHECK(l3.branch == LowerBranch::iii);

  auto l4 = lower_bound(make_bound_query(11, 3, 11, 3));
  CHECK(l4.branch == LowerBranch::iv);
  CHECK(l4.edges == 3 + 10 + 20);  // (n-2b)k + C(5,3) + C(6,3), floor term 0
}

TEST_CASE("bounds for the l = t case") {
  auto kt1 = kt_bounds(6, 2, 2);
  CHECK(kt1.upper == 9);  // 3 + 3*2
  CHECK(kt1.lower == 8);  // 10 - 1*2

  auto kt2 = kt_bounds(3, 2, 2);  // n = t
  CHECK(kt2.upper == 3);
  CHECK(kt2.lower == 3);

  auto kt3 = kt_bounds(4, 3, 3);  // n = t = 4
  CHECK(kt3.upper == 4);
  CHECK(kt3.lower == 4);

  CHECK_THROWS(kt_bounds(2, 2, 2));  // n < t
}

TEST_CASE("packing counts") {
  auto c1 = packing_counts(6, 3, 2, 2);
  CHECK(c1.count_i == 8);
  CHECK(c1.count_ii == 8);  // 3*2 + 3 - 1

  auto c2 = packing_counts(3, 3, 2, 2);  // n = a = t
  CHECK(c2.count_ii == binom(3, 2));

  auto c3 = packing_counts(8, 5, 3, 3);
  CHECK(c3.count_ii == 19);  // 9 + 10 - 0
  CHECK(c3.count_ii <= binom(8, 3));

  CHECK_THROWS(packing_counts(8, 3, 3, 3));  // a < t = 4
  CHECK_THROWS(packing_counts(4, 5, 3, 3));  // n < a
}

TEST_CASE("kt lower bound is the nucleus-t packing count") {
  for (long long k = 2; k <= 4; ++k)
    for (long long r = 2; r <= 3; ++r) {
      const long long t = t_param(k, r);
      for (long long n = t; n <= t + 12; ++n)
        CHECK(kt_bounds(n, k, r).lower == packing_counts(n, t, k, r).count_i);
    }
}

TEST_CASE("split-size edge profile g") {
  CHECK(g_profile(6, 3, 1) == 10);  // 0 + C(5,3)
  CHECK(g_profile(6, 3, 2) == 4);
  CHECK(g_profile(6, 3, 3) == 2);
  CHECK_THROWS(g_profile(6, 3, 0));
  CHECK_THROWS(g_profile(6, 3, 6));

  for (long long r = 2; r <= 6; ++r)
    for (long long n = r; n <= 40; ++n)
      for (long long x = 1; x + 1 <= n / 2; ++x)
        CHECK(g_profile(n, r, x) >= g_profile(n, r, x + 1));
}

TEST_CASE("lower bound never exceeds upper bound on the validation grid") {
  for (long long r : {2, 3})
    for (long long k : {2, 3, 4}) {
      const long long t = t_param(k, r);
      for (long long l = t + 1; l <= t + 6; ++l)
        for (long long n = l; n <= l + 10; ++n) {
          const BoundQuery q = make_bound_query(n, k, l, r);
          const BoundsReport rep = bounds(q);
          CHECK(rep.lower.edges <= rep.upper.edges);
          CHECK(rep.upper.edges == msh_edge_count(n, k, l, r));
          // Both packing counts stay realizable inside K_n^r.
          for (long long a = t; a <= n; ++a) {
            const PackingCounts pc = packing_counts(n, a, k, r);
            CHECK(pc.count_i <= binom(n, r));
            CHECK(pc.count_ii <= binom(n, r));
          }
        }
    }
}
