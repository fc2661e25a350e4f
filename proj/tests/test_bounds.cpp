#include <cmath>

#include "doctest.h"
#include "psmc/bounds.hpp"
#include "psmc/errors.hpp"

using namespace psmc;

namespace {

// count words within distance t of a masked center word by enumeration;
// the center holds level s at the stuck cells (the first u positions) and 0
// elsewhere, so any admissible word is reachable
uint64_t brute_sphere(size_t n, uint64_t q, size_t u, size_t t, uint32_t s, ErrorModel model) {
  std::vector<uint32_t> center(n, 0);
  for (size_t i = 0; i < u; ++i) center[i] = s;
  std::vector<uint32_t> word(n, 0);
  uint64_t count = 0;
  while (true) {
    size_t dist = 0;
    bool admissible = true;
    for (size_t i = 0; i < n; ++i) {
      if (word[i] != center[i]) {
        ++dist;
        if (model == ErrorModel::kNonOverlapping && i < u) admissible = false;
      }
      if (model == ErrorModel::kOverlapping && i < u && word[i] < s) admissible = false;
    }
    if (admissible && dist <= t) ++count;
    size_t pos = 0;
    while (pos < n && word[pos] + 1 == q) {
      word[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    ++word[pos];
  }
  return count;
}

// overlapping sphere size by explicit subset enumeration over the stuck set
BigUint subset_enumeration_sphere(size_t n, uint64_t q, size_t t,
                                  const std::vector<uint32_t>& levels) {
  size_t u = levels.size();
  BigUint total{0};
  for (size_t j = 0; j <= t; ++j) {
    for (size_t j1 = 0; j1 <= j; ++j1) {
      size_t m = j - j1;
      if (m > u) continue;
      // sum over all m-subsets of the stuck positions
      BigUint subset_sum{0};
      std::vector<size_t> idx(m);
      for (size_t i = 0; i < m; ++i) idx[i] = i;
      bool more = true;
      if (m == 0) {
        subset_sum = BigUint{1};
        more = false;
      }
      while (more) {
        BigUint prod{1};
        for (size_t i : idx) prod *= BigUint{q - 1 - levels[i]};
        subset_sum += prod;
        size_t i = m;
        more = false;
        while (i-- > 0) {
          if (idx[i] + 1 <= u - (m - i)) {
            ++idx[i];
            for (size_t k = i + 1; k < m; ++k) idx[k] = idx[k - 1] + 1;
            more = true;
            break;
          }
        }
      }
      total += BigUint::binomial(n - u, j1) * BigUint::pow(BigUint{q - 1}, j1) * subset_sum;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("BigUint arithmetic") {
  CHECK(BigUint::pow(BigUint{2}, 10).to_u64() == 1024);
  CHECK(BigUint::binomial(14, 2).to_u64() == 91);
  CHECK(BigUint::binomial(111, 3).to_u64() == 221815);
  CHECK(BigUint::binomial(5, 9).is_zero());

  BigUint a = BigUint::pow(BigUint{3}, 111);
  BigUint b = BigUint::pow(BigUint{2}, 10);
  CHECK((a * b).to_string() == "93488723625076337929334763268700683873648886988709014528");
  CHECK(BigUint::from_decimal((a * b).to_string()) == a * b);

  auto [quot, rem] = BigUint::divmod(a * b, BigUint{1799163});
  CHECK(quot.to_string() == "51962342280869681029086727144066815443430576878642");
  CHECK(rem < BigUint{1799163});
  CHECK(quot * BigUint{1799163} + rem == a * b);

  CHECK(BigUint::pow(BigUint{2}, 100).log2d() == doctest::Approx(100.0));
  CHECK_THROWS_AS(BigUint{3} - BigUint{5}, ValidationError);
  CHECK_THROWS_AS(BigUint::divmod(a, BigUint{0}), ValidationError);
}

TEST_CASE("masking-only bound") {
  CHECK(masking_only_bound(6, 3, {}) == BigUint::pow(BigUint{3}, 6));
  // every cell pinned to the top level leaves one choice per stuck cell
  CHECK(masking_only_bound(6, 4, {3, 3, 3}) == BigUint::pow(BigUint{4}, 3));
  // n=5, q=4, u=4, s=1: 4 * 3^4 = 324
  CHECK(masking_only_bound(5, 4, {1, 1, 1, 1}).to_u64() == 324);
  CHECK_THROWS_AS(masking_only_bound(2, 4, {1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(masking_only_bound(5, 4, {4}), ValidationError);
}

TEST_CASE("non-overlapping sphere-packing bound") {
  // t=0 degenerates to the masking-only bound
  auto q0 = BoundQuery::uniform(12, 4, 3, 0, 1, ErrorModel::kNonOverlapping);
  CHECK(sp_non_overlapping(q0).max_cardinality == masking_only_bound(12, 4, {1, 1, 1}));
  CHECK(sp_non_overlapping(q0).sphere_size == BigUint{1});

  // u=0 is the classical Hamming bound: 2^15 / 16 = 2048 at n=15, t=1
  auto qh = BoundQuery::uniform(15, 2, 0, 1, 1, ErrorModel::kNonOverlapping);
  CHECK(sp_non_overlapping(qh).max_cardinality.to_u64() == 2048);

  // frozen large instance, cross-checked against an independent evaluation
  auto qf = BoundQuery::uniform(121, 3, 10, 3, 1, ErrorModel::kNonOverlapping);
  BoundResult res = sp_non_overlapping(qf);
  CHECK(res.sphere_size.to_string() == "1799163");
  CHECK(res.rhs.to_string() == "93488723625076337929334763268700683873648886988709014528");
  CHECK(res.max_cardinality.to_string() ==
        "51962342280869681029086727144066815443430576878642");
  CHECK(res.k_info == doctest::Approx(104.19927477).epsilon(1e-9));
}

TEST_CASE("overlapping sphere-packing bound") {
  // t=0 matches the non-overlapping bound
  auto base = BoundQuery::uniform(10, 4, 4, 0, 1, ErrorModel::kOverlapping);
  auto base_n = BoundQuery::uniform(10, 4, 4, 0, 1, ErrorModel::kNonOverlapping);
  CHECK(sp_overlapping(base).max_cardinality == sp_non_overlapping(base_n).max_cardinality);

  // u=0 equals the classical Hamming bound
  auto qh = BoundQuery::uniform(15, 2, 0, 1, 1, ErrorModel::kOverlapping);
  CHECK(sp_overlapping(qh).max_cardinality.to_u64() == 2048);

  // the assumption s < q-1 is enforced
  auto bad = BoundQuery::uniform(10, 4, 2, 1, 3, ErrorModel::kOverlapping);
  CHECK_THROWS_AS(sp_overlapping(bad), ValidationError);
  auto bad2 = BoundQuery::uniform(10, 2, 2, 1, 1, ErrorModel::kOverlapping);
  CHECK_THROWS_AS(sp_overlapping(bad2), ValidationError);
}

TEST_CASE("uniform overlapping sphere equals explicit subset enumeration") {
  for (size_t u : {0u, 2u, 5u, 8u}) {
    for (size_t t : {0u, 1u, 3u}) {
      auto q = BoundQuery::uniform(12, 4, u, t, 1, ErrorModel::kOverlapping);
      CHECK(sp_overlapping(q).sphere_size == subset_enumeration_sphere(12, 4, t, q.levels));
    }
  }
  // mixed levels
  BoundQuery q;
  q.n = 9;
  q.q = 5;
  q.u = 3;
  q.t = 2;
  q.levels = {1, 3, 2};
  q.model = ErrorModel::kOverlapping;
  CHECK(sp_overlapping(q).sphere_size == subset_enumeration_sphere(9, 5, 2, q.levels));
}

TEST_CASE("sphere sizes match brute-force enumeration") {
  for (uint64_t q : {2u, 3u, 4u}) {
    for (size_t n : {5u, 7u}) {
      for (size_t u : {0u, 2u, 3u}) {
        for (size_t t : {0u, 1u, 2u}) {
          auto query = BoundQuery::uniform(n, q, u, t, 1, ErrorModel::kNonOverlapping);
          CHECK(sp_non_overlapping(query).sphere_size ==
                BigUint{brute_sphere(n, q, u, t, 1, ErrorModel::kNonOverlapping)});
          if (q > 2) {
            auto qo = BoundQuery::uniform(n, q, u, t, 1, ErrorModel::kOverlapping);
            CHECK(sp_overlapping(qo).sphere_size ==
                  BigUint{brute_sphere(n, q, u, t, 1, ErrorModel::kOverlapping)});
          }
        }
      }
    }
  }
}

TEST_CASE("bound result invariants") {
  auto query = BoundQuery::uniform(20, 3, 4, 2, 1, ErrorModel::kNonOverlapping);
  BoundResult res = sp_non_overlapping(query);
  CHECK(res.max_cardinality * res.sphere_size <= res.rhs);
  CHECK((res.max_cardinality + BigUint{1}) * res.sphere_size > res.rhs);
  CHECK(res.k_info <= 20.0);

  // monotone in t and u
  BigUint prev;
  bool first = true;
  for (size_t t = 0; t <= 6; ++t) {
    auto q = BoundQuery::uniform(20, 3, 4, t, 1, ErrorModel::kNonOverlapping);
    BigUint cur = sp_non_overlapping(q).max_cardinality;
    if (!first) CHECK(cur <= prev);
    prev = cur;
    first = false;
  }
  first = true;
  for (size_t u = 0; u <= 6; ++u) {
    auto q = BoundQuery::uniform(20, 3, u, 2, 1, ErrorModel::kOverlapping);
    BigUint cur = sp_overlapping(q).max_cardinality;
    if (!first) CHECK(cur <= prev);
    prev = cur;
    first = false;
  }
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(sp_non_overlapping(BoundQuery::uniform(5, 3, 6, 0, 1, ErrorModel::kNonOverlapping)),
                  ValidationError);
  BoundQuery wrong_levels;
  wrong_levels.n = 5;
  wrong_levels.q = 3;
  wrong_levels.u = 2;
  wrong_levels.levels = {1};
  CHECK_THROWS_AS(sp_non_overlapping(wrong_levels), ValidationError);
  auto wrong_model = BoundQuery::uniform(5, 3, 1, 1, 1, ErrorModel::kOverlapping);
  CHECK_THROWS_AS(sp_non_overlapping(wrong_model), ValidationError);
}
