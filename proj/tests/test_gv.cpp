#include "doctest.h"
#include "psmc/bounds.hpp"
#include "psmc/errors.hpp"

using namespace psmc;

TEST_CASE("gv_check spot values") {
  CHECK(gv_check(7, 4, 3, 2));         // 1 + 6 = 7 < 8
  CHECK_FALSE(gv_check(7, 4, 4, 2));   // 1 + 6 + 15 = 22 >= 8
  CHECK(gv_check(5, 3, 1, 2));         // empty sum
  CHECK(gv_check(9, 5, 3, 3));         // 1 + 16 = 17 < 81
  CHECK_THROWS_AS(gv_check(7, 0, 3, 2), ValidationError);
  CHECK_THROWS_AS(gv_check(7, 8, 3, 2), ValidationError);
  CHECK_THROWS_AS(gv_check(7, 4, 8, 2), ValidationError);
}

TEST_CASE("gv_max_d") {
  CHECK(gv_max_d(8, 8, 2) == 1);  // no redundancy
  CHECK(gv_max_d(8, 4, 2) == 2);  // d=2 passes (1 < 8), d=3 fails (7 >= 4)

  // agreement with direct gv_check evaluation
  for (uint64_t q : {2u, 3u}) {
    for (size_t n_f : {10u, 17u, 31u}) {
      for (size_t k_f = 1; k_f <= n_f; ++k_f) {
        size_t d = gv_max_d(n_f, k_f, q);
        size_t n = n_f - 1;
        if (d >= 2) {
          CHECK(gv_check(n, k_f + d - 2, d, q));
        }
        size_t next = d + 1;
        bool next_valid = next >= 2 && k_f + next - 2 <= n && next <= n;
        if (next_valid) CHECK_FALSE(gv_check(n, k_f + next - 2, next, q));
      }
    }
  }

  // non-increasing in k_f
  for (uint64_t q : {2u, 3u}) {
    size_t prev = SIZE_MAX;
    for (size_t k_f = 1; k_f <= 31; ++k_f) {
      size_t d = gv_max_d(31, k_f, q);
      CHECK(d <= prev);
      prev = d;
    }
  }
}

TEST_CASE("gv_construct satisfies the independent verifier") {
  auto gf2 = FieldSpec::make(2, 1);
  auto gf3 = FieldSpec::make(3, 1);

  GvConstruction a = gv_construct(7, 4, 3, gf2);
  CHECK(gv_verify(a, 7, 4, 3).ok());

  GvConstruction b = gv_construct(9, 5, 3, gf3);
  CHECK(gv_verify(b, 9, 5, 3).ok());

  CHECK_THROWS_AS(gv_construct(7, 4, 4, gf2), ValidationError);
}

TEST_CASE("gv_construct exercises the parity-repair branches") {
  auto gf2 = FieldSpec::make(2, 1);
  auto gf3 = FieldSpec::make(3, 1);

  // binary dependent case: the parity column and its dependency set vanish
  bool binary_dependent_seen = false;
  for (size_t n = 4; n <= 10; ++n) {
    for (size_t k = 1; k < n; ++k) {
      for (size_t d = 2; d <= 4 && d <= n; ++d) {
        if (!gv_check(n, k, d, 2)) continue;
        GvConstruction gc = gv_construct(n, k, d, gf2);
        CHECK(gv_verify(gc, n, k, d).ok());
        if (gc.delta > 0) {
          binary_dependent_seen = true;
          CHECK(gc.scaled == 0);  // every coefficient is 1 = q-1 over GF(2)
          CHECK(gc.dropped == gc.delta);
          CHECK(gc.n_prime == n - gc.delta);
        } else {
          // either the parity column was independent, or it was zero and dropped
          CHECK((gc.n_prime == n + 1 || gc.n_prime == n));
        }
      }
    }
  }
  CHECK(binary_dependent_seen);

  // ternary: coefficient-1 dependencies keep the column, doubled
  bool ternary_scaled_seen = false;
  for (size_t n = 4; n <= 10; ++n) {
    for (size_t k = 1; k < n; ++k) {
      for (size_t d = 2; d <= 4 && d <= n; ++d) {
        if (!gv_check(n, k, d, 3)) continue;
        GvConstruction gc = gv_construct(n, k, d, gf3);
        CHECK(gv_verify(gc, n, k, d).ok());
        if (gc.scaled > 0) ternary_scaled_seen = true;
      }
    }
  }
  CHECK(ternary_scaled_seen);
}

TEST_CASE("constructed codes contain the all-one word") {
  auto gf3 = FieldSpec::make(3, 1);
  GvConstruction gc = gv_construct(9, 5, 3, gf3);
  RrefResult rr = rref(gc.h);
  LinearCode code = LinearCode::from_parity_check(rr.matrix.submatrix_rows(0, rr.rank));
  CHECK(contains_all_one(code));
  CHECK(code.length() == gc.n_prime);
  CHECK(code.dimension() == gc.k_prime);
}

TEST_CASE("psmc_from_gv yields a working masking scheme") {
  auto gf3 = FieldSpec::make(3, 1);
  GvPsmc pipeline = psmc_from_gv(9, 5, 3, gf3, 2);
  const AllOnePsmc& scheme = pipeline.scheme;
  CHECK(scheme.radius() == 1);

  // one stuck pair, every message, every pattern of weight <= 1
  size_t n = scheme.length();
  StuckProfile phi = StuckProfile::uniform(n, {0, n / 2}, 1);
  size_t k = scheme.message_length();
  std::vector<uint32_t> msg(k, 0);
  auto spec = scheme.code().spec();
  while (true) {
    VectorF m(spec, msg);
    VectorF c = scheme.encode(m, phi);
    for (size_t pos : phi.positions) CHECK(c.v[pos] != 0);
    auto clean = scheme.decode(c);
    REQUIRE(clean.has_value());
    CHECK(*clean == m);
    for (size_t pos = 0; pos < n; ++pos) {
      for (uint32_t delta = 1; delta < 3; ++delta) {
        VectorF y = c;
        y.v[pos] = spec->add(y.v[pos], delta);
        auto back = scheme.decode(y);
        REQUIRE(back.has_value());
        CHECK(*back == m);
      }
    }
    size_t pos = 0;
    while (pos < k && msg[pos] + 1 == 3) {
      msg[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
    ++msg[pos];
  }

  CHECK_THROWS_AS(psmc_from_gv(9, 5, 3, gf3, 3), ValidationError);  // u = q
}

TEST_CASE("psmc_from_gv with d = 1 gives a masking-only scheme") {
  auto gf3 = FieldSpec::make(3, 1);
  GvPsmc pipeline = psmc_from_gv(4, 4, 1, gf3, 2);
  CHECK(pipeline.scheme.radius() == 0);
  VectorF m(pipeline.code.spec(), std::vector<uint32_t>(pipeline.scheme.message_length(), 1));
  StuckProfile phi = StuckProfile::uniform(pipeline.scheme.length(), {0, 1}, 1);
  VectorF c = pipeline.scheme.encode(m, phi);
  CHECK(c.v[0] != 0);
  CHECK(c.v[1] != 0);
  auto back = pipeline.scheme.decode(c);
  REQUIRE(back.has_value());
  CHECK(*back == m);
}
