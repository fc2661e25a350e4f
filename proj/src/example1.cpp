#include "psmc/example1.hpp"

#include <ostream>

#include "psmc/errors.hpp"
#include "psmc/linear_code.hpp"

namespace psmc::example1 {

namespace {

// 0, 1, 2 = a, 3 = 1+a
constexpr uint32_t kG[11][15] = {
    {1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 0, 0, 0},
    {0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0, 0},
    {0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0},
    {0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
};

constexpr uint32_t kGPrime[11][15] = {
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1},
    {1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1},
    {0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0, 0},
    {0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0},
    {0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1},
};

MatrixF from_array(const uint32_t (&rows)[11][15]) {
  std::vector<std::vector<uint32_t>> data(11, std::vector<uint32_t>(15));
  for (size_t r = 0; r < 11; ++r) {
    for (size_t c = 0; c < 15; ++c) data[r][c] = rows[r][c];
  }
  return MatrixF::from_rows(field(), data);
}

void report_line(std::ostream& log, const char* name, bool ok, const std::string& detail = "") {
  log << (ok ? "[ ok ] " : "[FAIL] ") << name;
  if (!detail.empty()) log << ": " << detail;
  log << '\n';
}

}  // namespace

FieldPtr field() {
  static FieldPtr spec = FieldSpec::make(2, 2, {1, 1, 1});
  return spec;
}

PsmcScheme::Params params() { return PsmcScheme::Params{14, 4, 1, 4, 6, 4}; }

MatrixF h0_matrix() {
  std::vector<std::vector<uint32_t>> rows(4, std::vector<uint32_t>(14));
  for (size_t r = 0; r < 4; ++r) {
    for (size_t c = 0; c < 14; ++c) rows[r][c] = kG[r][c];
  }
  return MatrixF::from_rows(field(), rows);
}

MatrixF p_matrix() {
  std::vector<std::vector<uint32_t>> rows(6, std::vector<uint32_t>(4));
  for (size_t r = 0; r < 6; ++r) {
    for (size_t c = 0; c < 4; ++c) rows[r][c] = kG[4 + r][10 + c];
  }
  return MatrixF::from_rows(field(), rows);
}

MatrixF g_matrix() { return from_array(kG); }

MatrixF g_prime_matrix() { return from_array(kGPrime); }

VectorF message_m() { return VectorF(field(), {1, 0, 1, 2, 3, 1}); }

VectorF message_m_prime() { return VectorF(field(), {2, 0, 2, 0}); }

StuckProfile stuck_profile() { return StuckProfile::uniform(15, {1, 2, 9, 14}, 1); }

PsmcScheme build_scheme() {
  return PsmcScheme::build(field(), params(), h0_matrix(), p_matrix());
}

Report run(std::ostream& log) {
  Report report;

  PsmcScheme scheme = build_scheme();
  report.scheme_ok = scheme.code().generator() == g_matrix();
  report_line(log, "scheme assembles the reference generator", report.scheme_ok);

  report.params_ok = scheme.min_dist() == 3 && scheme.d0() == 3 && scheme.u0() == 2;
  report_line(log, "parameters", report.params_ok,
              "d=" + std::to_string(scheme.min_dist()) + " d0=" + std::to_string(scheme.d0()) +
                  " u0=" + std::to_string(scheme.u0()));

  StuckProfile phi = stuck_profile();
  VectorF sent = scheme.encode(message_m(), message_m_prime(), phi);
  report.masking_ok = true;
  for (size_t pos : phi.positions) {
    if (sent.v[pos] == 0) report.masking_ok = false;
  }
  report.masking_ok = report.masking_ok && scheme.code().contains(sent);
  report_line(log, "masking at positions {1,2,9,14}", report.masking_ok);

  // every pattern of weight <= 1: the clean word plus 15 * 3 single errors
  report.roundtrip_ok = true;
  size_t patterns = 0;
  auto check_pattern = [&](const VectorF& corrupted) {
    ++patterns;
    auto decoded = scheme.decode(corrupted);
    if (!decoded || !(decoded->m == message_m()) || !(decoded->m_prime == message_m_prime())) {
      report.roundtrip_ok = false;
    }
  };
  check_pattern(sent);
  for (size_t pos = 0; pos < 15; ++pos) {
    for (uint32_t delta = 1; delta < 4; ++delta) {
      VectorF corrupted = sent;
      corrupted.v[pos] = field()->add(corrupted.v[pos], delta);
      check_pattern(corrupted);
    }
  }
  report.roundtrip_ok = report.roundtrip_ok && patterns == 46;
  report_line(log, "roundtrip under all 46 patterns of weight <= 1", report.roundtrip_ok);

  MatrixF rref_g = rref(g_matrix()).matrix;
  MatrixF rref_gp = rref(g_prime_matrix()).matrix;
  report.rref_equal = rref_g == rref_gp;
  report_line(log, "RREF(G) == RREF(G')", report.rref_equal);

  BigUint ours = scheme.cardinality();
  BigUint prior = BigUint::pow(BigUint{4}, 7);
  report.cardinality_ok = ours == BigUint::pow(BigUint{4}, 8) && prior < ours;
  report_line(log, "cardinality", report.cardinality_ok,
              "this construction: 4^8 = " + ours.to_string() + " > prior: 4^7 = " + prior.to_string());

  LinearCode prior_code = LinearCode::from_generator(g_prime_matrix());
  report.prior_distance_ok = min_distance(prior_code) == 3;
  report_line(log, "prior code has minimum distance 3", report.prior_distance_ok);

  return report;
}

}  // namespace psmc::example1
