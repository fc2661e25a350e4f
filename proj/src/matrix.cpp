#include "psmc/matrix.hpp"

#include <algorithm>

#include "psmc/errors.hpp"

namespace psmc {

namespace {
void check_same_spec(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b || !a->same_field(*b)) throw ValidationError("operands over different fields");
}
}  // namespace

VectorF::VectorF(FieldPtr s, std::vector<uint32_t> vals) : spec(std::move(s)), v(std::move(vals)) {
  for (uint32_t x : v) spec->check_element(x);
}

size_t VectorF::hamming_weight() const {
  size_t w = 0;
  for (uint32_t x : v) w += (x != 0);
  return w;
}

bool operator==(const VectorF& a, const VectorF& b) {
  check_same_spec(a.spec, b.spec);
  return a.v == b.v;
}

VectorF operator+(const VectorF& a, const VectorF& b) {
  check_same_spec(a.spec, b.spec);
  if (a.size() != b.size()) throw ValidationError("vector length mismatch");
  VectorF out(a.spec, a.size());
  for (size_t i = 0; i < a.size(); ++i) out.v[i] = a.spec->add(a.v[i], b.v[i]);
  return out;
}

VectorF operator-(const VectorF& a, const VectorF& b) {
  check_same_spec(a.spec, b.spec);
  if (a.size() != b.size()) throw ValidationError("vector length mismatch");
  VectorF out(a.spec, a.size());
  for (size_t i = 0; i < a.size(); ++i) out.v[i] = a.spec->sub(a.v[i], b.v[i]);
  return out;
}

VectorF scale(uint32_t c, const VectorF& a) {
  VectorF out(a.spec, a.size());
  for (size_t i = 0; i < a.size(); ++i) out.v[i] = a.spec->mul(c, a.v[i]);
  return out;
}

size_t hamming_distance(const VectorF& a, const VectorF& b) {
  if (a.size() != b.size()) throw ValidationError("vector length mismatch");
  size_t d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += (a.v[i] != b.v[i]);
  return d;
}

MatrixF::MatrixF(FieldPtr spec, size_t rows, size_t cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

MatrixF MatrixF::from_rows(FieldPtr spec, const std::vector<std::vector<uint32_t>>& rows) {
  if (rows.empty()) throw ValidationError("matrix needs at least one row");
  MatrixF m(std::move(spec), rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw ValidationError("ragged matrix rows");
    for (size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

MatrixF MatrixF::identity(FieldPtr spec, size_t n) {
  MatrixF m(std::move(spec), n, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void MatrixF::set(size_t r, size_t c, uint32_t v) {
  spec_->check_element(v);
  e_[r * cols_ + c] = v;
}

VectorF MatrixF::row(size_t r) const {
  VectorF out(spec_, cols_);
  for (size_t c = 0; c < cols_; ++c) out.v[c] = at(r, c);
  return out;
}

VectorF MatrixF::col(size_t c) const {
  VectorF out(spec_, rows_);
  for (size_t r = 0; r < rows_; ++r) out.v[r] = at(r, c);
  return out;
}

MatrixF MatrixF::submatrix_cols(const std::vector<size_t>& cols) const {
  MatrixF out(spec_, rows_, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw ValidationError("column index out of range");
    for (size_t r = 0; r < rows_; ++r) out.set(r, j, at(r, cols[j]));
  }
  return out;
}

MatrixF MatrixF::submatrix_rows(size_t first, size_t count) const {
  if (first + count > rows_) throw ValidationError("row range out of range");
  MatrixF out(spec_, count, cols_);
  for (size_t r = 0; r < count; ++r) {
    for (size_t c = 0; c < cols_; ++c) out.set(r, c, at(first + r, c));
  }
  return out;
}

MatrixF MatrixF::transposed() const {
  MatrixF out(spec_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
  }
  return out;
}

MatrixF MatrixF::with_appended_col(const std::vector<uint32_t>& col) const {
  if (col.size() != rows_) throw ValidationError("appended column has wrong height");
  MatrixF out(spec_, rows_, cols_ + 1);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
    out.set(r, cols_, col[r]);
  }
  return out;
}

bool operator==(const MatrixF& a, const MatrixF& b) {
  check_same_spec(a.spec(), b.spec());
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) {
      if (a.at(r, c) != b.at(r, c)) return false;
    }
  }
  return true;
}

VectorF vec_mat_mul(const VectorF& v, const MatrixF& m) {
  check_same_spec(v.spec, m.spec());
  if (v.size() != m.rows()) throw ValidationError("vector/matrix dimension mismatch");
  const FieldSpec& f = *m.spec();
  VectorF out(m.spec(), m.cols());
  for (size_t r = 0; r < m.rows(); ++r) {
    uint32_t x = v.v[r];
    if (x == 0) continue;
    for (size_t c = 0; c < m.cols(); ++c) {
      out.v[c] = f.add(out.v[c], f.mul(x, m.at(r, c)));
    }
  }
  return out;
}

MatrixF mat_mul(const MatrixF& a, const MatrixF& b) {
  check_same_spec(a.spec(), b.spec());
  if (a.cols() != b.rows()) throw ValidationError("matrix dimension mismatch");
  const FieldSpec& f = *a.spec();
  MatrixF out(a.spec(), a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      uint32_t x = a.at(i, k);
      if (x == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        out.set(i, j, f.add(out.at(i, j), f.mul(x, b.at(k, j))));
      }
    }
  }
  return out;
}

RrefResult rref(const MatrixF& m) {
  const FieldSpec& f = *m.spec();
  size_t rows = m.rows(), cols = m.cols();
  std::vector<uint32_t> work(rows * cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) work[r * cols + c] = m.at(r, c);
  }
  auto at = [&](size_t r, size_t c) -> uint32_t& { return work[r * cols + c]; };

  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = rows;
    for (size_t i = r; i < rows; ++i) {
      if (at(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    for (size_t j = 0; j < cols; ++j) std::swap(at(r, j), at(sel, j));
    uint32_t piv_inv = f.inv(at(r, c));
    for (size_t j = 0; j < cols; ++j) at(r, j) = f.mul(piv_inv, at(r, j));
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || at(i, c) == 0) continue;
      uint32_t factor = at(i, c);
      for (size_t j = 0; j < cols; ++j) {
        at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  MatrixF out(m.spec(), rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) out.set(i, j, work[i * cols + j]);
  }
  return {std::move(out), pivots.size(), std::move(pivots)};
}

size_t rank(const MatrixF& m) { return rref(m).rank; }

std::optional<VectorF> solve_left(const MatrixF& a, const VectorF& target) {
  check_same_spec(a.spec(), target.spec);
  if (target.size() != a.cols()) throw ValidationError("target length must equal column count");
  // x * a = target  <=>  a^T x^T = target^T; eliminate on [a^T | target^T]
  MatrixF aug = a.transposed().with_appended_col(target.v);
  RrefResult rr = rref(aug);
  size_t unknowns = a.rows();
  VectorF x(a.spec(), unknowns);
  for (size_t i = 0; i < rr.rank; ++i) {
    size_t pc = rr.pivot_cols[i];
    if (pc == unknowns) return std::nullopt;  // pivot in the augmented column
    x.v[pc] = rr.matrix.at(i, unknowns);
  }
  return x;
}

MatrixF kernel(const MatrixF& m) {
  RrefResult rr = rref(m);
  size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : rr.pivot_cols) is_pivot[c] = true;
  size_t dim = cols - rr.rank;
  MatrixF out(m.spec(), dim, cols);
  const FieldSpec& f = *m.spec();
  size_t row_out = 0;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    out.set(row_out, free_c, 1);
    for (size_t i = 0; i < rr.rank; ++i) {
      out.set(row_out, rr.pivot_cols[i], f.neg(rr.matrix.at(i, free_c)));
    }
    ++row_out;
  }
  return out;
}

bool columns_independent(const MatrixF& m, const std::vector<size_t>& subset) {
  for (size_t c : subset) {
    if (c >= m.cols()) throw ValidationError("column index out of range");
  }
  if (subset.empty()) return true;
  return rank(m.submatrix_cols(subset)) == subset.size();
}

}  // namespace psmc
