#include "psmc/scheme.hpp"

#include <algorithm>
#include <string>

#include "psmc/errors.hpp"

namespace psmc {

namespace {

VectorF all_one(const FieldPtr& spec, size_t n) {
  VectorF v(spec, n);
  std::fill(v.v.begin(), v.v.end(), 1u);
  return v;
}

VectorF add_constant(const VectorF& v, uint32_t c) {
  VectorF out = v;
  for (auto& x : out.v) x = v.spec->add(x, c);
  return out;
}

VectorF sub_constant(const VectorF& v, uint32_t c) {
  VectorF out = v;
  for (auto& x : out.v) x = v.spec->sub(x, c);
  return out;
}

}  // namespace

StuckProfile StuckProfile::make(size_t cell_count, std::vector<size_t> positions,
                                std::vector<uint32_t> levels) {
  if (positions.size() != levels.size()) throw ValidationError("one level per stuck position required");
  for (size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= cell_count) throw ValidationError("stuck position out of range");
    if (i > 0 && positions[i] <= positions[i - 1]) {
      throw ValidationError("stuck positions must be strictly increasing");
    }
    if (levels[i] == 0) throw ValidationError("stuck levels must be at least 1");
  }
  StuckProfile p;
  p.cell_count = cell_count;
  p.positions = std::move(positions);
  p.levels = std::move(levels);
  return p;
}

StuckProfile StuckProfile::uniform(size_t cell_count, std::vector<size_t> positions,
                                   uint32_t level) {
  std::vector<uint32_t> levels(positions.size(), level);
  return make(cell_count, std::move(positions), std::move(levels));
}

PsmcScheme::PsmcScheme(FieldPtr spec, Params params, MatrixF h0, MatrixF p, MatrixF top_rows,
                       MatrixF mid_rows, LinearCode code, SyndromeDecoder decoder, size_t u0,
                       size_t d, size_t d0)
    : spec_(std::move(spec)),
      params_(params),
      u0_(u0),
      d_(d),
      d0_(d0),
      h0_(std::move(h0)),
      p_(std::move(p)),
      top_rows_(std::move(top_rows)),
      mid_rows_(std::move(mid_rows)),
      code_(std::move(code)),
      decoder_(std::move(decoder)) {}

PsmcScheme PsmcScheme::build(FieldPtr spec, const Params& params, MatrixF h0, MatrixF p,
                             uint64_t budget) {
  if (spec->characteristic() != 2) throw ValidationError("scheme requires characteristic 2");
  if (spec->extension_degree() < 2) throw ValidationError("scheme requires extension degree > 1");
  const auto [n, u, t, l, k1, r] = params;
  if (l < 1 || k1 < 1) throw ValidationError("l and k1 must be positive");
  if (l + k1 + r != n) throw ValidationError("dimension equation l + k1 + r = n violated");
  if (u > n || t > n) throw ValidationError("u and t must not exceed n");
  if (h0.rows() != l || h0.cols() != n) throw ValidationError("H0 must be l x n");
  if (p.rows() != k1 || p.cols() != r) throw ValidationError("P must be k1 x r");
  if (!h0.spec()->same_field(*spec) || !p.spec()->same_field(*spec)) {
    throw ValidationError("H0 and P must live in the scheme field");
  }
  for (size_t i = 0; i < l; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (h0.at(i, j) > 1) throw ValidationError("H0 must be binary");
      if (j < l && h0.at(i, j) != (i == j ? 1u : 0u)) {
        throw ValidationError("H0 must be systematic [I | R]");
      }
    }
  }

  size_t u0 = (2 * u) >> spec->extension_degree();

  // d0 = smallest number of linearly dependent H0 columns; must exceed u0
  size_t d0 = l + 1;
  BigUint subsets{0};
  for (size_t s = 1; s <= l && s <= n; ++s) {
    subsets += BigUint::binomial(n, s);
    if (subsets > BigUint{budget}) throw BudgetExceeded("H0 column-independence sweep exceeds budget");
    bool dependent_found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      if (!columns_independent(h0, idx)) {
        dependent_found = true;
        break;
      }
      size_t i = s;
      bool advanced = false;
      while (i-- > 0) {
        if (idx[i] + 1 <= n - (s - i)) {
          ++idx[i];
          for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    if (dependent_found) {
      d0 = s;
      break;
    }
  }
  if (d0 < u0 + 1) {
    throw ValidationError("H0 is not a parity-check matrix of distance >= u0+1 (d0 too small)");
  }

  // G = [[H0 | 0], [0 I P | 0], [1 ... 1]]
  MatrixF g(spec, l + k1 + 1, n + 1);
  for (size_t i = 0; i < l; ++i) {
    for (size_t j = 0; j < n; ++j) g.set(i, j, h0.at(i, j));
  }
  for (size_t i = 0; i < k1; ++i) {
    g.set(l + i, l + i, 1);
    for (size_t j = 0; j < r; ++j) g.set(l + i, l + k1 + j, p.at(i, j));
  }
  for (size_t j = 0; j <= n; ++j) g.set(l + k1, j, 1);

  LinearCode code = LinearCode::from_generator(g);
  size_t d = min_distance(code, budget);
  if (d < 2 * t + 1) throw ValidationError("code minimum distance is below 2t+1");
  SyndromeDecoder decoder(code, t, budget);

  MatrixF top = g.submatrix_rows(0, l);
  MatrixF mid = g.submatrix_rows(l, k1);
  return PsmcScheme(std::move(spec), params, std::move(h0), std::move(p), std::move(top),
                    std::move(mid), std::move(code), std::move(decoder), u0, d, d0);
}

BigUint PsmcScheme::cardinality() const {
  uint64_t exp = static_cast<uint64_t>(spec_->extension_degree()) * (params_.k1 + params_.l) - params_.l;
  return BigUint::pow(BigUint{2}, exp);
}

FieldElement select_coset_shift(const VectorF& w_base, const StuckProfile& phi) {
  const FieldSpec& f = *w_base.spec;
  if (f.characteristic() != 2) throw ValidationError("coset shift requires characteristic 2");
  for (size_t pos : phi.positions) {
    if (pos >= w_base.size()) throw ValidationError("stuck position out of range");
  }
  uint32_t best_z = 0;
  size_t best_count = phi.count() + 1;
  for (uint32_t z : f.subspace_f()) {
    uint32_t shift = f.add(z, 1);
    size_t count = 0;
    for (size_t pos : phi.positions) {
      if (f.add(w_base.v[pos], shift) < 2) ++count;
    }
    if (count < best_count) {
      best_count = count;
      best_z = z;
    }
  }
  return FieldElement(f, best_z);
}

VectorF solve_masking_vector(const VectorF& w, const StuckProfile& phi, const MatrixF& h0,
                             size_t max_constrained) {
  size_t n = h0.cols();
  std::vector<size_t> cols;
  std::vector<uint32_t> targets;
  for (size_t pos : phi.positions) {
    if (w.v[pos] > 1) continue;  // already outside F_2, nothing to mask
    if (pos >= n) {
      // the appended column is identically zero; only w = 1 is consistent there
      if (w.v[pos] == 0) throw ValidationError("cannot mask a zero beyond the H0 columns");
      continue;
    }
    cols.push_back(pos);
    targets.push_back(w.v[pos] == 0 ? 1u : 0u);
  }
  if (cols.size() > max_constrained) {
    throw ValidationError("more binary-valued stuck positions than the pigeonhole bound allows");
  }
  VectorF target(w.spec, std::move(targets));
  auto solution = solve_left(h0.submatrix_cols(cols), target);
  if (!solution) throw ValidationError("masking system is unsolvable");
  for (uint32_t x : solution->v) {
    if (x > 1) throw ValidationError("masking solve left the binary subfield");
  }
  return *solution;
}

VectorF PsmcScheme::encode(const VectorF& m, const VectorF& m_prime,
                           const StuckProfile& phi) const {
  const FieldSpec& f = *spec_;
  if (!m.spec->same_field(f) || !m_prime.spec->same_field(f)) {
    throw ValidationError("message vectors must live in the scheme field");
  }
  if (m.size() != params_.k1) throw ValidationError("m must have length k1");
  if (m_prime.size() != params_.l) throw ValidationError("m' must have length l");
  for (uint32_t x : m_prime.v) {
    if (x & 1u) throw ValidationError("m' entries must lie in F (zero constant coefficient)");
  }
  if (phi.cell_count != params_.n + 1) throw ValidationError("stuck profile sized for n+1 cells required");
  if (phi.count() > params_.u) throw ValidationError("more stuck positions than the scheme masks");
  for (uint32_t s : phi.levels) {
    if (s != 1) throw ValidationError("only stuck-at level 1 is supported");
  }

  VectorF a = vec_mat_mul(m_prime, top_rows_);
  VectorF b = vec_mat_mul(m, mid_rows_);
  VectorF ab = a + b;
  FieldElement z = select_coset_shift(ab, phi);
  VectorF w = add_constant(ab, f.add(z.value(), 1));
  VectorF z_vec = solve_masking_vector(w, phi, h0_, u0_);
  VectorF c = w + vec_mat_mul(z_vec, top_rows_);

  for (size_t pos : phi.positions) {
    if (c.v[pos] == 0) throw std::logic_error("masking failed to clear a stuck position");
  }
  return c;
}

std::optional<PsmcScheme::Decoded> PsmcScheme::decode(const VectorF& received) const {
  if (received.size() != params_.n + 1) throw ValidationError("received word must have length n+1");
  auto v = decoder_.decode(received);
  if (!v) return std::nullopt;

  // last coordinate carries z+1; subtracting it strips the all-one row
  VectorF v_prime = sub_constant(*v, v->v[params_.n]);
  VectorF m_hat2(spec_, params_.l);
  for (size_t i = 0; i < params_.l; ++i) m_hat2.v[i] = v_prime.v[i];
  VectorF m_prime(spec_, params_.l);
  for (size_t i = 0; i < params_.l; ++i) m_prime.v[i] = spec_->phi_clear_constant(m_hat2.v[i]);

  VectorF v_second = v_prime - vec_mat_mul(m_hat2, top_rows_);
  VectorF m(spec_, params_.k1);
  for (size_t i = 0; i < params_.k1; ++i) m.v[i] = v_second.v[params_.l + i];
  return Decoded{std::move(m), std::move(m_prime)};
}

AllOnePsmc::AllOnePsmc(LinearCode code, size_t t, uint64_t budget)
    : code_(std::move(code)), t_(t), decoder_(code_, t, budget) {
  if (!contains_all_one(code_)) throw ValidationError("code does not contain the all-one word");
  if (code_.dimension() < 1) throw ValidationError("code dimension must be at least 1");

  RrefResult rr = rref(code_.generator());
  VectorF ones = all_one(code_.spec(), code_.length());
  auto coeffs = solve_left(rr.matrix, ones);
  if (!coeffs) throw std::logic_error("all-one word not reachable from generator rows");
  size_t drop = code_.dimension();
  for (size_t i = 0; i < coeffs->size(); ++i) {
    if (coeffs->v[i] != 0) {
      drop = i;
      break;
    }
  }

  size_t k = code_.dimension();
  g_sub_ = MatrixF(code_.spec(), k - 1, code_.length());
  basis_ = MatrixF(code_.spec(), k, code_.length());
  size_t out = 0;
  for (size_t i = 0; i < k; ++i) {
    if (i == drop) continue;
    for (size_t j = 0; j < code_.length(); ++j) {
      g_sub_.set(out, j, rr.matrix.at(i, j));
      basis_.set(out, j, rr.matrix.at(i, j));
    }
    ++out;
  }
  for (size_t j = 0; j < code_.length(); ++j) basis_.set(k - 1, j, 1);
}

VectorF AllOnePsmc::encode(const VectorF& m, const StuckProfile& phi) const {
  const FieldSpec& f = *code_.spec();
  if (m.size() != message_length()) throw ValidationError("message has wrong length");
  if (phi.cell_count != length()) throw ValidationError("stuck profile sized for the code length required");
  if (phi.count() >= f.order()) throw ValidationError("all-one masking requires u < q");
  for (uint32_t s : phi.levels) {
    if (s != 1) throw ValidationError("only stuck-at level 1 is supported");
  }

  VectorF c0 = vec_mat_mul(m, g_sub_);
  std::vector<bool> forbidden(f.order(), false);
  for (size_t pos : phi.positions) forbidden[f.neg(c0.v[pos])] = true;
  uint32_t gamma = 0;
  while (gamma < f.order() && forbidden[gamma]) ++gamma;
  if (gamma == f.order()) throw std::logic_error("no admissible all-one shift found");

  VectorF c = add_constant(c0, gamma);
  for (size_t pos : phi.positions) {
    if (c.v[pos] == 0) throw std::logic_error("masking failed to clear a stuck position");
  }
  return c;
}

std::optional<VectorF> AllOnePsmc::decode(const VectorF& received) const {
  auto c = decoder_.decode(received);
  if (!c) return std::nullopt;
  auto coeffs = solve_left(basis_, *c);
  if (!coeffs) throw std::logic_error("decoded word is outside the code");
  VectorF m(code_.spec(), message_length());
  for (size_t i = 0; i < message_length(); ++i) m.v[i] = coeffs->v[i];
  return m;
}

}  // namespace psmc
