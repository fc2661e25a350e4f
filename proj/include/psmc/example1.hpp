#pragma once

#include <iosfwd>

#include "psmc/matrix.hpp"
#include "psmc/scheme.hpp"

namespace psmc::example1 {

// Built-in GF(4) reference instance: a [15, 11] code masking u = 4 cells at
// positions {1, 2, 9, 14} while correcting one error, plus the generator of
// the earlier construction it is compared against.

FieldPtr field();                 // GF(4) with modulus x^2 + x + 1
PsmcScheme::Params params();      // n=14 u=4 t=1 l=4 k1=6 r=4
MatrixF h0_matrix();              // 4 x 14 binary
MatrixF p_matrix();               // 6 x 4
MatrixF g_matrix();               // 11 x 15, assembled block form
MatrixF g_prime_matrix();         // 11 x 15, prior construction
VectorF message_m();              // (1, 0, 1, a, 1+a, 1)
VectorF message_m_prime();        // (a, 0, a, 0)
StuckProfile stuck_profile();     // {1, 2, 9, 14}, level 1
PsmcScheme build_scheme();

struct Report {
  bool scheme_ok = false;
  bool params_ok = false;      // d, d0, u0 match the reference values
  bool masking_ok = false;
  bool roundtrip_ok = false;   // all 46 patterns of weight <= 1
  bool rref_equal = false;     // RREF(G) == RREF(G')
  bool cardinality_ok = false; // 4^8 vs 4^7
  bool prior_distance_ok = false;
  bool all_ok() const {
    return scheme_ok && params_ok && masking_ok && roundtrip_ok && rref_equal &&
           cardinality_ok && prior_distance_ok;
  }
};

// Runs every check, one log line each; returns the outcome per check.
Report run(std::ostream& log);

}  // namespace psmc::example1
