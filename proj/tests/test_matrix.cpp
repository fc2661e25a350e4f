#include "doctest.h"
#include "psmc/errors.hpp"
#include "psmc/example1.hpp"
#include "psmc/matrix.hpp"
#include "psmc/rng.hpp"

using namespace psmc;

namespace {

MatrixF random_matrix(const FieldPtr& spec, size_t rows, size_t cols, SplitMix64& rng) {
  MatrixF m(spec, rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      m.set(r, c, static_cast<uint32_t>(rng.below(spec->order())));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("vec_mat_mul picks rows for unit vectors") {
  auto g = example1::g_matrix();
  for (size_t i = 0; i < g.rows(); ++i) {
    VectorF e(g.spec(), g.rows());
    e.v[i] = 1;
    CHECK(vec_mat_mul(e, g) == g.row(i));
  }
  auto id = MatrixF::identity(g.spec(), 5);
  VectorF ones(g.spec(), std::vector<uint32_t>(5, 1));
  CHECK(vec_mat_mul(ones, id) == ones);

  VectorF wrong(g.spec(), 3);
  CHECK_THROWS_AS(vec_mat_mul(wrong, g), ValidationError);
}

TEST_CASE("vec_mat_mul matches direct expansion on the reference matrix") {
  auto g = example1::g_matrix();
  const auto& f = *g.spec();
  // m' = (a, 0, a, 0) against the top rows: a * (row0 + row2)
  VectorF mp = example1::message_m_prime();
  MatrixF top = g.submatrix_rows(0, 4);
  VectorF got = vec_mat_mul(mp, top);
  for (size_t j = 0; j < g.cols(); ++j) {
    uint32_t expect = f.mul(2, f.add(g.at(0, j), g.at(2, j)));
    CHECK(got.v[j] == expect);
  }
}

TEST_CASE("rref basics") {
  auto spec = example1::field();
  auto id = MatrixF::identity(spec, 6);
  auto rr = rref(id);
  CHECK(rr.matrix == id);
  CHECK(rr.rank == 6);

  MatrixF zero(spec, 3, 5);
  auto rz = rref(zero);
  CHECK(rz.rank == 0);
  CHECK(rz.matrix == zero);

  CHECK(rref(example1::g_matrix()).rank == 11);
  CHECK(rref(example1::g_prime_matrix()).rank == 11);
}

TEST_CASE("rref is idempotent and preserves the row space") {
  SplitMix64 rng(77);
  for (auto spec : {FieldSpec::make(2, 2), FieldSpec::make(3, 1), FieldSpec::make(5, 1)}) {
    for (int trial = 0; trial < 10; ++trial) {
      MatrixF m = random_matrix(spec, 4, 7, rng);
      auto rr = rref(m);
      auto rr2 = rref(rr.matrix);
      CHECK(rr.matrix == rr2.matrix);
      CHECK(rr.rank == rr2.rank);
      CHECK(rank(m) == rr.rank);
      // every original row stays expressible over the reduced rows
      for (size_t i = 0; i < m.rows(); ++i) {
        CHECK(solve_left(rr.matrix, m.row(i)).has_value());
      }
    }
  }
}

TEST_CASE("solve_left") {
  auto spec = example1::field();
  auto id = MatrixF::identity(spec, 4);
  VectorF t(spec, {1, 2, 3, 0});
  auto x = solve_left(id, t);
  REQUIRE(x.has_value());
  CHECK(*x == t);

  MatrixF zero(spec, 3, 4);
  VectorF nonzero(spec, {1, 0, 0, 0});
  CHECK_FALSE(solve_left(zero, nonzero).has_value());

  // masking system: H0 columns at the in-range stuck positions
  auto h0 = example1::h0_matrix();
  MatrixF sub = h0.submatrix_cols({1, 2, 9});
  VectorF target(spec, {1, 0, 1});
  auto z = solve_left(sub, target);
  REQUIRE(z.has_value());
  CHECK(vec_mat_mul(*z, sub) == target);
  for (uint32_t v : z->v) CHECK(v <= 1);  // binary system stays binary
}

TEST_CASE("solve_left output substituted back reproduces the target") {
  SplitMix64 rng(1234);
  auto spec = FieldSpec::make(3, 2);
  for (int trial = 0; trial < 20; ++trial) {
    MatrixF a = random_matrix(spec, 4, 6, rng);
    VectorF x0(spec, 4);
    for (auto& v : x0.v) v = static_cast<uint32_t>(rng.below(spec->order()));
    VectorF target = vec_mat_mul(x0, a);
    auto x = solve_left(a, target);
    REQUIRE(x.has_value());
    CHECK(vec_mat_mul(*x, a) == target);
  }
}

TEST_CASE("columns_independent") {
  auto spec = example1::field();
  auto h0 = example1::h0_matrix();
  CHECK(columns_independent(h0, {0}));

  MatrixF dup(spec, 2, 3);
  dup.set(0, 0, 1);
  dup.set(0, 1, 1);
  dup.set(1, 2, 1);
  CHECK_FALSE(columns_independent(dup, {0, 1}));

  // every 2-subset of the reference H0 columns is independent: d0 >= 3
  for (size_t a = 0; a < 14; ++a) {
    for (size_t b = a + 1; b < 14; ++b) {
      CHECK(columns_independent(h0, {a, b}));
    }
  }
  CHECK_THROWS_AS(columns_independent(h0, {99}), ValidationError);
}

TEST_CASE("columns_independent agrees with submatrix rank") {
  SplitMix64 rng(555);
  auto spec = FieldSpec::make(2, 2);
  MatrixF m = random_matrix(spec, 4, 8, rng);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<size_t> subset;
    for (size_t c = 0; c < 8; ++c) {
      if (rng.below(2)) subset.push_back(c);
    }
    CHECK(columns_independent(m, subset) == (rank(m.submatrix_cols(subset)) == subset.size()));
  }
}

TEST_CASE("kernel rows annihilate the matrix") {
  SplitMix64 rng(999);
  for (auto spec : {FieldSpec::make(2, 2), FieldSpec::make(3, 1)}) {
    for (int trial = 0; trial < 10; ++trial) {
      MatrixF m = random_matrix(spec, 3, 7, rng);
      MatrixF k = kernel(m);
      CHECK(k.rows() == 7 - rank(m));
      for (size_t i = 0; i < k.rows(); ++i) {
        VectorF prod = vec_mat_mul(k.row(i), m.transposed());
        CHECK(prod.hamming_weight() == 0);
      }
      CHECK(rank(k) == k.rows());
    }
  }
}
