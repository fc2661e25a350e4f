#pragma once

#include <cstdint>
#include <vector>

#include "psmc/bigint.hpp"
#include "psmc/error_model.hpp"
#include "psmc/linear_code.hpp"
#include "psmc/matrix.hpp"
#include "psmc/scheme.hpp"

namespace psmc {

// One sphere-packing evaluation point: n cells over an alphabet of size q,
// u of them partially stuck at the given levels, up to t errors.
struct BoundQuery {
  size_t n = 0;
  uint64_t q = 2;
  size_t u = 0;
  size_t t = 0;
  std::vector<uint32_t> levels;  // size u
  ErrorModel model = ErrorModel::kNonOverlapping;

  static BoundQuery uniform(size_t n, uint64_t q, size_t u, size_t t, uint32_t level,
                            ErrorModel model);
};

struct BoundResult {
  BigUint sphere_size;
  BigUint rhs;              // q^(n-u) * prod(q - s_i)
  BigUint max_cardinality;  // floor(rhs / sphere_size)
  double k_info;            // log_q(max_cardinality)
};

// upper bound on the number of storable words with masking only
BigUint masking_only_bound(size_t n, uint64_t q, const std::vector<uint32_t>& levels);

BoundResult sp_non_overlapping(const BoundQuery& query);
BoundResult sp_overlapping(const BoundQuery& query);

// existence condition sum_{i=0}^{d-2} C(n-1, i) (q-1)^i < q^(n-k)
bool gv_check(size_t n, size_t k, size_t d, uint64_t q);

// largest d >= 2 with gv_check(n_f - 1, k_f + d - 2, d, q); 1 if none.
// The designed (n, k) are tilted to the largest disadvantage so that a code
// with exact parameters [n_f, k_f, >= d] is guaranteed.
size_t gv_max_d(size_t n_f, size_t k_f, uint64_t q);

struct GvConstruction {
  MatrixF h;        // (n-k) x n_prime, every row sums to zero
  size_t n_prime;   // actual length, n-d+2 <= n_prime <= n+1
  size_t k_prime;   // n_prime - (n - k)
  size_t delta;     // dependent columns found for the parity column (0 if independent)
  size_t dropped;   // columns removed outright
  size_t scaled;    // columns kept with a nonzero rescaling
};

// Greedy parity-check construction behind the existence bound: grow columns
// that avoid every combination of up to d-2 previous ones, close the row sums
// with a parity column, then repair any short dependency it introduced.
GvConstruction gv_construct(size_t n, size_t k, size_t d, const FieldPtr& spec,
                            uint64_t budget = kDefaultExhaustiveBudget);

// Property check of a constructed parity-check matrix against the designed
// (n, k, d), by direct rank computations; independent of the greedy search.
struct GvVerification {
  bool row_sums_zero = false;
  bool subsets_independent = false;  // every (d-1)-subset of columns
  bool brackets_ok = false;          // n-d+2 <= n' <= n+1, k' = n'-(n-k) >= k-d+2
  bool ok() const { return row_sums_zero && subsets_independent && brackets_ok; }
};

GvVerification gv_verify(const GvConstruction& gc, size_t n, size_t k, size_t d,
                         uint64_t budget = kDefaultExhaustiveBudget);

struct GvPsmc {
  GvConstruction construction;
  LinearCode code;
  AllOnePsmc scheme;  // (u, floor((d-1)/2)) masking + error correction
};

// u < q stuck cells masked through the all-one codeword of a constructed code
GvPsmc psmc_from_gv(size_t n, size_t k, size_t d, const FieldPtr& spec, size_t u,
                    uint64_t budget = kDefaultExhaustiveBudget);

}  // namespace psmc
