#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psmc/bigint.hpp"
#include "psmc/linear_code.hpp"
#include "psmc/matrix.hpp"

namespace psmc {

// Positions and levels of (partially) stuck cells in a word of cell_count cells.
struct StuckProfile {
  size_t cell_count = 0;
  std::vector<size_t> positions;  // strictly increasing
  std::vector<uint32_t> levels;   // one per position, each >= 1

  static StuckProfile make(size_t cell_count, std::vector<size_t> positions,
                           std::vector<uint32_t> levels);
  static StuckProfile uniform(size_t cell_count, std::vector<size_t> positions, uint32_t level);

  size_t count() const { return positions.size(); }
};

// Masking/error-correction scheme over GF(2^lambda), lambda > 1.
//
// The generator of the underlying [n+1, l+k1+1] code is assembled from a
// binary systematic H0 = [I_l | R] (l x n), a k1 x r block P, and an all-one
// last row:
//
//     G = [ H0        | 0 ]
//         [ 0  I  P   | 0 ]
//         [ 1  ...    1   ]
//
// Encoding shifts the word into a coset of F = {a : a_0 = 0} so that at most
// u0 = floor(2u / 2^lambda) stuck positions hold binary values, then clears
// those with a binary combination of H0 rows.
class PsmcScheme {
 public:
  struct Params {
    size_t n, u, t, l, k1, r;
  };

  static PsmcScheme build(FieldPtr spec, const Params& params, MatrixF h0, MatrixF p,
                          uint64_t budget = kDefaultExhaustiveBudget);

  const FieldPtr& spec() const { return spec_; }
  size_t n() const { return params_.n; }
  size_t u() const { return params_.u; }
  size_t t() const { return params_.t; }
  size_t l() const { return params_.l; }
  size_t k1() const { return params_.k1; }
  size_t r() const { return params_.r; }
  size_t u0() const { return u0_; }
  size_t min_dist() const { return d_; }
  size_t d0() const { return d0_; }
  const MatrixF& h0() const { return h0_; }
  const MatrixF& p() const { return p_; }
  const LinearCode& code() const { return code_; }

  // message space size 2^(lambda*(k1+l) - l)
  BigUint cardinality() const;

  // m over GF(2^lambda) of length k1, m_prime over F of length l,
  // phi over n+1 cells with all levels 1; output is a codeword of the
  // underlying code that is nonzero at every stuck position
  VectorF encode(const VectorF& m, const VectorF& m_prime, const StuckProfile& phi) const;

  struct Decoded {
    VectorF m;
    VectorF m_prime;
  };
  std::optional<Decoded> decode(const VectorF& received) const;

 private:
  PsmcScheme(FieldPtr spec, Params params, MatrixF h0, MatrixF p, MatrixF top_rows,
             MatrixF mid_rows, LinearCode code, SyndromeDecoder decoder, size_t u0, size_t d,
             size_t d0);

  FieldPtr spec_;
  Params params_;
  size_t u0_, d_, d0_;
  MatrixF h0_;        // l x n, binary
  MatrixF p_;         // k1 x r
  MatrixF top_rows_;  // [H0 | 0], first l rows of G
  MatrixF mid_rows_;  // [0 I P | 0], middle k1 rows of G
  LinearCode code_;
  SyndromeDecoder decoder_;
};

// z in F minimizing the number of entries of (w_base + (z+1)*1) that land in
// {0,1} at the stuck positions; ties broken by ascending integer encoding
FieldElement select_coset_shift(const VectorF& w_base, const StuckProfile& phi);

// binary z_vec with (z_vec * H0 | 0) = 1 at stuck positions where w is 0 and
// = 0 where w is 1; positions with w outside {0,1} are unconstrained.
// max_constrained is the scheme's pigeonhole guarantee u0.
VectorF solve_masking_vector(const VectorF& w, const StuckProfile& phi, const MatrixF& h0,
                             size_t max_constrained);

// Masking-only-style (u, t)-scheme for u < q from any code containing the
// all-one word: shift m * G_sub by gamma * 1 with gamma avoiding the at most
// u forbidden values.
class AllOnePsmc {
 public:
  AllOnePsmc(LinearCode code, size_t t, uint64_t budget = kDefaultExhaustiveBudget);

  size_t length() const { return code_.length(); }
  size_t message_length() const { return code_.dimension() - 1; }
  size_t radius() const { return t_; }
  const LinearCode& code() const { return code_; }

  VectorF encode(const VectorF& m, const StuckProfile& phi) const;
  std::optional<VectorF> decode(const VectorF& received) const;

 private:
  LinearCode code_;
  size_t t_;
  MatrixF g_sub_;  // (k-1) x n, complement of the all-one line
  MatrixF basis_;  // g_sub rows plus the all-one row
  SyndromeDecoder decoder_;
};

}  // namespace psmc
