#include "psmc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <unordered_set>

#include "psmc/errors.hpp"

namespace psmc {

namespace {

void check_query(const BoundQuery& query) {
  if (query.q < 2) throw ValidationError("alphabet size must be at least 2");
  if (query.u > query.n) throw ValidationError("u must not exceed n");
  if (query.t > query.n) throw ValidationError("t must not exceed n");
  if (query.levels.size() != query.u) throw ValidationError("one level per stuck cell required");
  for (uint32_t s : query.levels) {
    if (s < 1 || s >= query.q) throw ValidationError("stuck levels must lie in [1, q-1]");
  }
}

BigUint rhs_value(const BoundQuery& query) {
  BigUint rhs = BigUint::pow(BigUint{query.q}, query.n - query.u);
  for (uint32_t s : query.levels) rhs *= BigUint{query.q - s};
  return rhs;
}

BoundResult finish(const BoundQuery& query, BigUint sphere) {
  BigUint rhs = rhs_value(query);
  BigUint card = BigUint::divmod(rhs, sphere).first;
  double k_info = card.log2d() / std::log2(static_cast<double>(query.q));
  return BoundResult{std::move(sphere), std::move(rhs), std::move(card), k_info};
}

}  // namespace

BoundQuery BoundQuery::uniform(size_t n, uint64_t q, size_t u, size_t t, uint32_t level,
                               ErrorModel model) {
  BoundQuery query;
  query.n = n;
  query.q = q;
  query.u = u;
  query.t = t;
  query.levels.assign(u, level);
  query.model = model;
  return query;
}

BigUint masking_only_bound(size_t n, uint64_t q, const std::vector<uint32_t>& levels) {
  BoundQuery query;
  query.n = n;
  query.q = q;
  query.u = levels.size();
  query.t = 0;
  query.levels = levels;
  check_query(query);
  return rhs_value(query);
}

BoundResult sp_non_overlapping(const BoundQuery& query) {
  check_query(query);
  if (query.model != ErrorModel::kNonOverlapping) {
    throw ValidationError("query is not for the non-overlapping model");
  }
  BigUint sphere{0};
  for (size_t j = 0; j <= query.t; ++j) {
    sphere += BigUint::binomial(query.n - query.u, j) * BigUint::pow(BigUint{query.q - 1}, j);
  }
  return finish(query, std::move(sphere));
}

BoundResult sp_overlapping(const BoundQuery& query) {
  check_query(query);
  if (query.model != ErrorModel::kOverlapping) {
    throw ValidationError("query is not for the overlapping model");
  }
  for (uint32_t s : query.levels) {
    if (s >= query.q - 1) {
      throw ValidationError("the overlapping bound assumes every stuck level is below q-1");
    }
  }
  // e[m] = sum over m-subsets J of the stuck cells of prod_{i in J} (q-1-s_i);
  // for uniform levels this collapses to C(u, m) (q-1-s)^m
  std::vector<BigUint> e(query.u + 1, BigUint{0});
  e[0] = BigUint{1};
  for (uint32_t s : query.levels) {
    for (size_t m = query.u; m >= 1; --m) {
      e[m] += e[m - 1] * BigUint{query.q - 1 - s};
    }
  }
  BigUint sphere{0};
  for (size_t j = 0; j <= query.t; ++j) {
    for (size_t j1 = 0; j1 <= j; ++j1) {
      size_t m = j - j1;
      if (m > query.u) continue;
      sphere += BigUint::binomial(query.n - query.u, j1) *
                BigUint::pow(BigUint{query.q - 1}, j1) * e[m];
    }
  }
  return finish(query, std::move(sphere));
}

bool gv_check(size_t n, size_t k, size_t d, uint64_t q) {
  if (q < 2) throw ValidationError("alphabet size must be at least 2");
  if (k < 1 || k > n) throw ValidationError("gv_check requires 1 <= k <= n");
  if (d < 1 || d > n) throw ValidationError("gv_check requires 1 <= d <= n");
  BigUint sum{0};
  if (d >= 2) {
    for (size_t i = 0; i + 2 <= d; ++i) {
      sum += BigUint::binomial(n - 1, i) * BigUint::pow(BigUint{q - 1}, i);
    }
  }
  return sum < BigUint::pow(BigUint{q}, n - k);
}

size_t gv_max_d(size_t n_f, size_t k_f, uint64_t q) {
  if (k_f < 1 || k_f > n_f) throw ValidationError("gv_max_d requires 1 <= k_f <= n_f");
  size_t n = n_f - 1;
  size_t best = 1;
  // incremental evaluation of gv_check(n, k_f + d - 2, d, q) for d = 2, 3, ...;
  // the left side only grows and the right side only shrinks, so the first
  // failure is final
  BigUint sum{1};   // i = 0 term
  BigUint term{1};  // C(n-1, i) (q-1)^i for the current largest i
  if (n == 0 || k_f > n) return best;
  BigUint rhs = BigUint::pow(BigUint{q}, n - k_f);  // q^(n-k) at d = 2
  for (size_t d = 2; d <= n; ++d) {
    size_t k = k_f + d - 2;
    if (k > n) break;
    if (!(sum < rhs)) break;
    best = d;
    // extend for d+1: add the i = d-1 term, divide the rhs by q
    size_t i = d - 2;
    if (i + 1 <= n - 1) {
      term.mul_small(static_cast<uint32_t>(n - 1 - i));
      term.mul_small(static_cast<uint32_t>(q - 1));
      term.divmod_small(static_cast<uint32_t>(i + 1));
    } else {
      term = BigUint{0};
    }
    sum += term;
    rhs = BigUint::divmod(rhs, BigUint{q}).first;
  }
  return best;
}

namespace {

// column <-> integer encoding, entry of row 0 most significant
uint64_t encode_column(const std::vector<uint32_t>& col, uint64_t q) {
  uint64_t enc = 0;
  for (uint32_t x : col) enc = enc * q + x;
  return enc;
}

std::vector<uint32_t> decode_column(uint64_t enc, uint64_t q, size_t m) {
  std::vector<uint32_t> col(m, 0);
  for (size_t i = m; i-- > 0;) {
    col[i] = static_cast<uint32_t>(enc % q);
    enc /= q;
  }
  return col;
}

// all values reachable as combinations of at most max_terms columns with
// nonzero coefficients
std::unordered_set<uint64_t> covered_set(const std::vector<std::vector<uint32_t>>& cols,
                                         size_t max_terms, const FieldSpec& f, uint64_t budget) {
  uint64_t q = f.order();
  size_t m = cols.empty() ? 0 : cols[0].size();
  BigUint work{0};
  for (size_t i = 0; i <= max_terms && i <= cols.size(); ++i) {
    work += BigUint::binomial(cols.size(), i) * BigUint::pow(BigUint{q - 1}, i);
  }
  if (work > BigUint{budget}) throw BudgetExceeded("greedy column search exceeds budget");

  std::unordered_set<uint64_t> covered;
  covered.insert(0);

  // depth-first over subsets in lexicographic order
  std::vector<uint32_t> sum(m, 0);
  std::function<void(size_t, size_t)> recurse = [&](size_t start, size_t depth) {
    if (depth == max_terms) return;
    for (size_t j = start; j < cols.size(); ++j) {
      for (uint32_t c = 1; c < q; ++c) {
        std::vector<uint32_t> saved = sum;
        for (size_t row = 0; row < m; ++row) {
          sum[row] = f.add(sum[row], f.mul(c, cols[j][row]));
        }
        covered.insert(encode_column(sum, q));
        recurse(j + 1, depth + 1);
        sum = std::move(saved);
      }
    }
  };
  recurse(0, 0);
  return covered;
}

// minimal-size representation of target as a combination of <= max_terms
// columns with nonzero coefficients; subsets scanned in lexicographic order
struct Dependency {
  std::vector<size_t> idx;
  std::vector<uint32_t> coeff;
};

std::optional<Dependency> find_dependency(const std::vector<std::vector<uint32_t>>& cols,
                                          const std::vector<uint32_t>& target, size_t max_terms,
                                          const FieldPtr& spec, uint64_t budget) {
  size_t m = target.size();
  bool target_zero = std::all_of(target.begin(), target.end(), [](uint32_t x) { return x == 0; });
  if (target_zero) return Dependency{};
  BigUint work{0};
  for (size_t s = 1; s <= max_terms; ++s) {
    if (s > cols.size()) break;
    work += BigUint::binomial(cols.size(), s);
    if (work > BigUint{budget}) throw BudgetExceeded("dependency search exceeds budget");
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      // solve sum_j x_j * cols[idx_j] = target
      MatrixF rows_m(spec, s, m);
      for (size_t j = 0; j < s; ++j) {
        for (size_t row = 0; row < m; ++row) rows_m.set(j, row, cols[idx[j]][row]);
      }
      VectorF tgt(spec, target);
      auto x = solve_left(rows_m, tgt);
      if (x) {
        bool all_nonzero = std::all_of(x->v.begin(), x->v.end(), [](uint32_t c) { return c != 0; });
        if (all_nonzero) return Dependency{idx, x->v};
      }
      size_t i = s;
      bool advanced = false;
      while (i-- > 0) {
        if (idx[i] + 1 <= cols.size() - (s - i)) {
          ++idx[i];
          for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return std::nullopt;
}

}  // namespace

GvConstruction gv_construct(size_t n, size_t k, size_t d, const FieldPtr& spec, uint64_t budget) {
  const FieldSpec& f = *spec;
  uint64_t q = f.order();
  if (!gv_check(n, k, d, q)) throw ValidationError("the existence condition does not hold");
  size_t m = n - k;  // parity rows

  if (m == 0) {
    // d = 1 only; the whole space works and needs no parity constraints
    GvConstruction out{MatrixF(spec, 0, n + 1), n + 1, n + 1, 0, 0, 0};
    return out;
  }
  if (static_cast<double>(m) * std::log2(static_cast<double>(q)) > 62.0) {
    throw BudgetExceeded("column encodings do not fit in 64 bits");
  }

  std::vector<std::vector<uint32_t>> cols;
  cols.reserve(n + 1);
  for (size_t i = 0; i < m; ++i) {
    std::vector<uint32_t> e(m, 0);
    e[i] = 1;
    cols.push_back(std::move(e));
  }
  size_t max_terms = d >= 2 ? d - 2 : 0;
  uint64_t qm = 1;
  for (size_t i = 0; i < m; ++i) qm *= q;
  while (cols.size() < n) {
    auto covered = covered_set(cols, max_terms, f, budget);
    uint64_t pick = qm;
    for (uint64_t enc = 0; enc < qm; ++enc) {
      if (!covered.count(enc)) {
        pick = enc;
        break;
      }
    }
    if (pick == qm) throw std::logic_error("no admissible column although the bound holds");
    cols.push_back(decode_column(pick, q, m));
  }

  // parity column closing every row sum to zero
  std::vector<uint32_t> p(m, 0);
  for (const auto& col : cols) {
    for (size_t row = 0; row < m; ++row) p[row] = f.add(p[row], col[row]);
  }
  for (size_t row = 0; row < m; ++row) p[row] = f.neg(p[row]);

  // for d = 1 there are no dependency sets of size <= d-2, so H_e always stands
  auto dep = d >= 2 ? find_dependency(cols, p, max_terms, spec, budget)
                    : std::optional<Dependency>{};

  std::vector<std::vector<uint32_t>> out_cols;
  size_t delta = 0, dropped = 0, scaled = 0;
  if (!dep) {
    out_cols = cols;
    out_cols.push_back(p);
  } else {
    delta = dep->idx.size();
    std::vector<bool> in_dep(n, false);
    for (size_t j : dep->idx) in_dep[j] = true;
    for (size_t j = 0; j < n; ++j) {
      if (!in_dep[j]) out_cols.push_back(cols[j]);
    }
    for (size_t j = 0; j < delta; ++j) {
      uint32_t factor = f.add(1, dep->coeff[j]);
      if (factor == 0) {
        ++dropped;
        continue;
      }
      ++scaled;
      std::vector<uint32_t> scaled_col(m);
      for (size_t row = 0; row < m; ++row) scaled_col[row] = f.mul(factor, cols[dep->idx[j]][row]);
      out_cols.push_back(std::move(scaled_col));
    }
  }

  size_t n_prime = out_cols.size();
  MatrixF h(spec, m, n_prime);
  for (size_t c = 0; c < n_prime; ++c) {
    for (size_t row = 0; row < m; ++row) h.set(row, c, out_cols[c][row]);
  }
  for (size_t row = 0; row < m; ++row) {
    uint32_t s = 0;
    for (size_t c = 0; c < n_prime; ++c) s = f.add(s, h.at(row, c));
    if (s != 0) throw std::logic_error("parity-check row does not sum to zero");
  }
  // removing dependency columns can leave redundant rows, in which case the
  // actual dimension exceeds the n' - (n-k) bookkeeping; report the actual one
  size_t k_prime = n_prime - rank(h);
  return GvConstruction{std::move(h), n_prime, k_prime, delta, dropped, scaled};
}

GvVerification gv_verify(const GvConstruction& gc, size_t n, size_t k, size_t d,
                         uint64_t budget) {
  const FieldSpec& f = *gc.h.spec();
  GvVerification v;

  v.row_sums_zero = true;
  for (size_t row = 0; row < gc.h.rows(); ++row) {
    uint32_t s = 0;
    for (size_t c = 0; c < gc.h.cols(); ++c) s = f.add(s, gc.h.at(row, c));
    if (s != 0) v.row_sums_zero = false;
  }

  v.subsets_independent = true;
  if (d >= 2) {
    size_t sub = d - 1;
    if (sub > gc.h.cols()) sub = gc.h.cols();
    BigUint work = BigUint::binomial(gc.h.cols(), sub);
    if (work > BigUint{budget}) throw BudgetExceeded("subset verification exceeds budget");
    std::vector<size_t> idx(sub);
    for (size_t i = 0; i < sub; ++i) idx[i] = i;
    bool more = sub > 0;
    while (more) {
      if (!columns_independent(gc.h, idx)) {
        v.subsets_independent = false;
        break;
      }
      size_t i = sub;
      more = false;
      while (i-- > 0) {
        if (idx[i] + 1 <= gc.h.cols() - (sub - i)) {
          ++idx[i];
          for (size_t j = i + 1; j < sub; ++j) idx[j] = idx[j - 1] + 1;
          more = true;
          break;
        }
      }
    }
  }

  bool lower = gc.n_prime + d >= n + 2;  // n' >= n-d+2 without underflow
  bool upper = gc.n_prime <= n + 1;
  // reported dimension is the actual one, never below the row bookkeeping
  bool k_actual = gc.k_prime == gc.n_prime - rank(gc.h);
  bool k_floor = gc.k_prime + (n - k) >= gc.n_prime;
  bool k_lower = gc.k_prime + d >= k + 2;  // k' >= k-d+2
  bool k_upper = gc.k_prime <= k + 1;
  v.brackets_ok = lower && upper && k_actual && k_floor && k_lower && k_upper;
  return v;
}

GvPsmc psmc_from_gv(size_t n, size_t k, size_t d, const FieldPtr& spec, size_t u,
                    uint64_t budget) {
  if (u >= spec->order()) throw ValidationError("all-one masking requires u < q");
  GvConstruction gc = gv_construct(n, k, d, spec, budget);
  LinearCode code = [&] {
    if (gc.h.rows() == 0) return LinearCode::from_generator(MatrixF::identity(spec, gc.n_prime));
    RrefResult rr = rref(gc.h);  // drop redundant rows before wrapping
    return LinearCode::from_parity_check(rr.matrix.submatrix_rows(0, rr.rank));
  }();
  if (!contains_all_one(code)) throw std::logic_error("constructed code misses the all-one word");
  size_t t = (d - 1) / 2;
  AllOnePsmc scheme(code, t, budget);
  return GvPsmc{std::move(gc), std::move(code), std::move(scheme)};
}

}  // namespace psmc
