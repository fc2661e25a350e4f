#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psmc/field.hpp"

namespace psmc {

// Row vector over a finite field, stored as raw encodings.
struct VectorF {
  FieldPtr spec;
  std::vector<uint32_t> v;

  VectorF() = default;
  VectorF(FieldPtr s, size_t n) : spec(std::move(s)), v(n, 0) {}
  VectorF(FieldPtr s, std::vector<uint32_t> vals);
  VectorF(FieldPtr s, std::initializer_list<uint32_t> vals)
      : VectorF(std::move(s), std::vector<uint32_t>(vals)) {}

  size_t size() const { return v.size(); }
  uint32_t operator[](size_t i) const { return v[i]; }
  uint32_t& operator[](size_t i) { return v[i]; }
  FieldElement elem(size_t i) const { return FieldElement(*spec, v[i]); }

  size_t hamming_weight() const;
  friend bool operator==(const VectorF& a, const VectorF& b);
};

VectorF operator+(const VectorF& a, const VectorF& b);
VectorF operator-(const VectorF& a, const VectorF& b);
VectorF scale(uint32_t c, const VectorF& a);
size_t hamming_distance(const VectorF& a, const VectorF& b);

// Dense row-major matrix over a finite field.
class MatrixF {
 public:
  MatrixF() = default;
  MatrixF(FieldPtr spec, size_t rows, size_t cols);
  static MatrixF from_rows(FieldPtr spec, const std::vector<std::vector<uint32_t>>& rows);
  static MatrixF identity(FieldPtr spec, size_t n);

  const FieldPtr& spec() const { return spec_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  uint32_t at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
  void set(size_t r, size_t c, uint32_t v);
  FieldElement elem(size_t r, size_t c) const { return FieldElement(*spec_, at(r, c)); }

  VectorF row(size_t r) const;
  VectorF col(size_t c) const;
  MatrixF submatrix_cols(const std::vector<size_t>& cols) const;
  MatrixF submatrix_rows(size_t first, size_t count) const;
  MatrixF transposed() const;
  MatrixF with_appended_col(const std::vector<uint32_t>& col) const;

  friend bool operator==(const MatrixF& a, const MatrixF& b);

 private:
  FieldPtr spec_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<uint32_t> e_;
};

VectorF vec_mat_mul(const VectorF& v, const MatrixF& m);
MatrixF mat_mul(const MatrixF& a, const MatrixF& b);

struct RrefResult {
  MatrixF matrix;
  size_t rank = 0;
  std::vector<size_t> pivot_cols;
};

// canonical reduced row echelon form (idempotent, unique per row space)
RrefResult rref(const MatrixF& m);
size_t rank(const MatrixF& m);

// any x with x * a == target, or nullopt when the system is inconsistent;
// free variables are set to zero
std::optional<VectorF> solve_left(const MatrixF& a, const VectorF& target);

// basis of { x : m * x^T = 0 }, one row per basis vector
MatrixF kernel(const MatrixF& m);

bool columns_independent(const MatrixF& m, const std::vector<size_t>& subset);

}  // namespace psmc
