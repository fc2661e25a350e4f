// Command-line front end: bound tables, GV construction, encode/decode on
// files, channel simulation, scheme verification, and the built-in reference
// example.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "psmc/bounds.hpp"
#include "psmc/channel.hpp"
#include "psmc/errors.hpp"
#include "psmc/example1.hpp"
#include "psmc/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitDecodeFailure = 3;
constexpr int kExitIo = 4;
constexpr int kExitBudget = 5;

struct Range {
  uint64_t lo = 0;
  uint64_t hi = 0;
};

// "a" or "lo:hi"; hi < lo is an empty range and yields no grid rows
Range parse_range(const std::string& text) {
  size_t colon = text.find(':');
  Range r;
  if (colon == std::string::npos) {
    r.lo = r.hi = std::stoull(text);
  } else {
    r.lo = std::stoull(text.substr(0, colon));
    r.hi = std::stoull(text.substr(colon + 1));
  }
  return r;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// stdout unless a path is given
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw psmc::IoError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_bounds(uint64_t n, uint64_t q, const std::string& u_text, const std::string& t_text,
               uint32_t s, const std::string& model_text, const std::string& out_path,
               const std::string& format) {
  auto model = psmc::error_model_from_string(model_text);
  if (!model) throw psmc::ValidationError("unknown model: " + model_text);
  Range u_range = parse_range(u_text);
  Range t_range = parse_range(t_text);

  OutputTarget out(out_path);
  if (format == "csv") {
    out.stream() << "n,q,u,t,s,model,sphere_size,rhs,max_cardinality,k_info\n";
  }
  for (uint64_t u = u_range.lo; u <= u_range.hi; ++u) {
    for (uint64_t t = t_range.lo; t <= t_range.hi; ++t) {
      auto query = psmc::BoundQuery::uniform(n, q, u, t, s, *model);
      psmc::BoundResult res = *model == psmc::ErrorModel::kNonOverlapping
                                  ? psmc::sp_non_overlapping(query)
                                  : psmc::sp_overlapping(query);
      if (format == "csv") {
        out.stream() << n << ',' << q << ',' << u << ',' << t << ',' << s << ','
                     << to_string(*model) << ',' << res.sphere_size.to_string() << ','
                     << res.rhs.to_string() << ',' << res.max_cardinality.to_string() << ','
                     << format_double(res.k_info) << '\n';
      } else {
        out.stream() << "n=" << n << " q=" << q << " u=" << u << " t=" << t << " s=" << s
                     << " model=" << to_string(*model)
                     << "  max_cardinality=" << res.max_cardinality.to_string()
                     << "  k_info=" << format_double(res.k_info) << '\n';
      }
    }
  }
  return kExitOk;
}

int run_gv_table(uint64_t q, uint64_t n_f, const std::string& kf_text,
                 const std::string& out_path) {
  Range kf = parse_range(kf_text);
  OutputTarget out(out_path);
  out.stream() << "n_f,k_f,q,d_max\n";
  for (uint64_t k_f = kf.lo; k_f <= kf.hi; ++k_f) {
    out.stream() << n_f << ',' << k_f << ',' << q << ',' << psmc::gv_max_d(n_f, k_f, q) << '\n';
  }
  return kExitOk;
}

int run_gv_construct(uint64_t q, uint64_t n, uint64_t k, uint64_t d,
                     const std::string& out_path) {
  // q as a prime power via the canonical field of that order
  uint32_t p = 0, lambda = 0;
  for (uint32_t cand = 2; cand <= q; ++cand) {
    uint64_t power = cand;
    uint32_t e = 1;
    while (power < q) {
      power *= cand;
      ++e;
    }
    if (power == q) {
      p = cand;
      lambda = e;
      break;
    }
  }
  if (p == 0) throw psmc::ValidationError("q must be a prime power");
  psmc::FieldPtr spec = psmc::FieldSpec::make(p, lambda);

  psmc::GvConstruction gc = psmc::gv_construct(n, k, d, spec);
  psmc::GvVerification ver = psmc::gv_verify(gc, n, k, d);
  std::cout << "constructed n'=" << gc.n_prime << " k'=" << gc.k_prime << " for designed [n=" << n
            << ", k=" << k << ", d=" << d << "]_" << q << '\n';
  std::cout << "verifier: row sums " << (ver.row_sums_zero ? "ok" : "FAIL") << ", "
            << (d >= 2 ? std::to_string(d - 1) : std::string("0"))
            << "-column subsets independent " << (ver.subsets_independent ? "ok" : "FAIL")
            << ", parameter brackets " << (ver.brackets_ok ? "ok" : "FAIL") << '\n';
  if (!out_path.empty()) {
    psmc::write_matrix_file(out_path, gc.h);
    std::cout << "parity-check matrix written to " << out_path << '\n';
  }
  return ver.ok() ? kExitOk : kExitValidation;
}

int run_encode(const std::string& scheme_path, const std::string& m_path,
               const std::string& mprime_path, const std::string& phi_text,
               const std::string& out_path) {
  psmc::PsmcScheme scheme = psmc::read_scheme_file(scheme_path);
  psmc::VectorF m = psmc::read_vector_file(m_path);
  psmc::VectorF mp = psmc::read_vector_file(mprime_path);
  std::vector<size_t> positions =
      phi_text.empty() ? std::vector<size_t>{} : psmc::parse_index_list(phi_text);
  psmc::StuckProfile phi = psmc::StuckProfile::uniform(scheme.n() + 1, positions, 1);
  psmc::VectorF codeword = scheme.encode(m, mp, phi);
  if (out_path.empty()) {
    psmc::write_vector(std::cout, codeword);
  } else {
    psmc::write_vector_file(out_path, codeword);
  }
  return kExitOk;
}

int run_decode(const std::string& scheme_path, const std::string& in_path,
               const std::string& out_m, const std::string& out_mprime) {
  psmc::PsmcScheme scheme = psmc::read_scheme_file(scheme_path);
  psmc::VectorF received = psmc::read_vector_file(in_path);
  auto decoded = scheme.decode(received);
  if (!decoded) {
    std::cerr << "decoding failure: no codeword within distance t\n";
    return kExitDecodeFailure;
  }
  if (out_m.empty()) {
    psmc::write_vector(std::cout, decoded->m);
  } else {
    psmc::write_vector_file(out_m, decoded->m);
  }
  if (out_mprime.empty()) {
    psmc::write_vector(std::cout, decoded->m_prime);
  } else {
    psmc::write_vector_file(out_mprime, decoded->m_prime);
  }
  return kExitOk;
}

int run_simulate(const std::string& scheme_path, uint64_t trials, uint64_t t_actual,
                 const std::string& model_text, uint64_t seed, const std::string& out_path) {
  auto model = psmc::error_model_from_string(model_text);
  if (!model) throw psmc::ValidationError("unknown model: " + model_text);
  psmc::PsmcScheme scheme = psmc::read_scheme_file(scheme_path);
  psmc::Construction1Codec codec(scheme);
  psmc::TrialReport report = psmc::run_trials(codec, trials, t_actual, *model, seed);
  OutputTarget out(out_path);
  out.stream() << psmc::TrialReport::csv_header() << '\n' << report.csv_row() << '\n';
  bool clean = report.masking_violations == 0 && report.decode_failures == 0 &&
               report.message_mismatches == 0;
  return (clean || t_actual > scheme.t()) ? kExitOk : kExitValidation;
}

int run_verify(const std::string& scheme_path) {
  try {
    psmc::PsmcScheme scheme = psmc::read_scheme_file(scheme_path);
    std::cout << "[ ok ] dimension equations (n=" << scheme.n() << " l=" << scheme.l()
              << " k1=" << scheme.k1() << " r=" << scheme.r() << ")\n";
    std::cout << "[ ok ] H0 binary and systematic\n";
    std::cout << "[ ok ] d0 = " << scheme.d0() << " >= u0+1 = " << scheme.u0() + 1
              << " (u0 = " << scheme.u0() << ")\n";
    std::cout << "[ ok ] d = " << scheme.min_dist() << " >= 2t+1 = " << 2 * scheme.t() + 1
              << '\n';
    std::cout << "[ ok ] generator rank " << scheme.l() + scheme.k1() + 1 << '\n';
    return kExitOk;
  } catch (const psmc::ValidationError& e) {
    std::cout << "[FAIL] " << e.what() << '\n';
    return kExitValidation;
  }
}

int run_example1(const std::string& emit_scheme) {
  psmc::example1::Report report = psmc::example1::run(std::cout);
  if (!emit_scheme.empty()) {
    psmc::write_scheme_file(emit_scheme, psmc::example1::build_scheme());
    std::cout << "scheme written to " << emit_scheme << '\n';
  }
  if (!report.all_ok()) {
    std::cerr << "one or more checks failed\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partially-stuck-cell masking codes: bounds, constructions, simulation"};
  app.require_subcommand(1);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "sphere-packing bound table over a (u, t) grid");
  uint64_t b_n = 0, b_q = 2;
  std::string b_u = "0", b_t = "0", b_model = "nonoverlap", b_out, b_format = "csv";
  uint32_t b_s = 1;
  bounds->add_option("--n", b_n, "word length")->required();
  bounds->add_option("--q", b_q, "alphabet size")->required();
  bounds->add_option("--u", b_u, "stuck-cell count or range lo:hi");
  bounds->add_option("--t", b_t, "error count or range lo:hi");
  bounds->add_option("--s", b_s, "uniform stuck level");
  bounds->add_option("--model", b_model, "nonoverlap or overlap");
  bounds->add_option("--out", b_out, "output path (default stdout)");
  bounds->add_option("--format", b_format, "csv or human");

  // gv
  auto* gv = app.add_subcommand("gv", "existence table or explicit parity-check construction");
  uint64_t g_q = 2, g_nf = 0, g_n = 0, g_k = 0, g_d = 0;
  std::string g_kf, g_out;
  bool g_construct = false;
  gv->add_option("--q", g_q, "alphabet size")->required();
  gv->add_option("--nf", g_nf, "fixed length for the d_max table");
  gv->add_option("--kf", g_kf, "dimension or range lo:hi for the table");
  gv->add_option("--n", g_n, "designed length (construction)");
  gv->add_option("--k", g_k, "designed dimension (construction)");
  gv->add_option("--d", g_d, "designed distance (construction)");
  gv->add_flag("--construct", g_construct, "build and verify the parity-check matrix");
  gv->add_option("--out", g_out, "output path");

  // encode
  auto* encode = app.add_subcommand("encode", "encode a message pair under a stuck profile");
  std::string e_scheme, e_m, e_mp, e_phi, e_out;
  encode->add_option("--scheme", e_scheme, "scheme file")->required();
  encode->add_option("--m", e_m, "message vector file (length k1)")->required();
  encode->add_option("--mprime", e_mp, "masking vector file (length l, entries in F)")->required();
  encode->add_option("--phi", e_phi, "stuck positions, e.g. 1,2,9,14");
  encode->add_option("--out", e_out, "codeword output path");

  // decode
  auto* decode = app.add_subcommand("decode", "decode a received word");
  std::string d_scheme, d_in, d_out_m, d_out_mp;
  decode->add_option("--scheme", d_scheme, "scheme file")->required();
  decode->add_option("--in", d_in, "received vector file")->required();
  decode->add_option("--out-m", d_out_m, "recovered m output path");
  decode->add_option("--out-mprime", d_out_mp, "recovered m' output path");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "seeded stuck-cell channel trials");
  std::string s_scheme, s_model = "nonoverlap", s_out;
  uint64_t s_trials = 10000, s_terrors = 0, s_seed = 1;
  simulate->add_option("--scheme", s_scheme, "scheme file")->required();
  simulate->add_option("--trials", s_trials, "number of trials");
  simulate->add_option("--terrors", s_terrors, "exact number of injected errors per trial");
  simulate->add_option("--model", s_model, "nonoverlap or overlap");
  simulate->add_option("--seed", s_seed, "stream seed");
  simulate->add_option("--out", s_out, "report path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "check every scheme precondition");
  std::string v_scheme;
  verify->add_option("--scheme", v_scheme, "scheme file")->required();

  // example1
  auto* example = app.add_subcommand("example1", "run the built-in reference instance");
  std::string x_emit;
  example->add_option("--emit-scheme", x_emit, "also write the instance as a scheme file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bounds->parsed()) return run_bounds(b_n, b_q, b_u, b_t, b_s, b_model, b_out, b_format);
    if (gv->parsed()) {
      if (g_construct) return run_gv_construct(g_q, g_n, g_k, g_d, g_out);
      if (g_nf == 0 || g_kf.empty()) {
        throw psmc::ValidationError("table mode needs --nf and --kf, construction needs --construct");
      }
      return run_gv_table(g_q, g_nf, g_kf, g_out);
    }
    if (encode->parsed()) return run_encode(e_scheme, e_m, e_mp, e_phi, e_out);
    if (decode->parsed()) return run_decode(d_scheme, d_in, d_out_m, d_out_mp);
    if (simulate->parsed()) return run_simulate(s_scheme, s_trials, s_terrors, s_model, s_seed, s_out);
    if (verify->parsed()) return run_verify(v_scheme);
    if (example->parsed()) return run_example1(x_emit);
  } catch (const psmc::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const psmc::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const psmc::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
