#include "psmc/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "psmc/errors.hpp"

namespace psmc {

namespace {

std::optional<std::string> next_data_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    return line;
  }
  return std::nullopt;
}

std::vector<uint64_t> tokenize_numbers(const std::string& line) {
  std::istringstream iss(line);
  std::vector<uint64_t> out;
  std::string tok;
  while (iss >> tok) {
    try {
      size_t used = 0;
      unsigned long long v = std::stoull(tok, &used);
      if (used != tok.size()) throw IoError("bad number: " + tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw IoError("bad number: " + tok);
    }
  }
  return out;
}

std::string require_line(std::istream& in, const char* what) {
  auto line = next_data_line(in);
  if (!line) throw IoError(std::string("unexpected end of input, expected ") + what);
  return *line;
}

}  // namespace

std::string field_line(const FieldSpec& spec) {
  std::ostringstream out;
  out << "field " << spec.characteristic() << ' ' << spec.extension_degree() << ' '
      << spec.modulus_encoding();
  return out.str();
}

FieldPtr parse_field_line(const std::string& line) {
  std::istringstream iss(line);
  std::string tag;
  iss >> tag;
  if (tag != "field") throw IoError("expected a field line");
  uint64_t p = 0, lambda = 0, modulus_enc = 0;
  if (!(iss >> p >> lambda >> modulus_enc)) throw IoError("malformed field line");
  std::vector<uint32_t> modulus(lambda + 1, 0);
  uint64_t e = modulus_enc;
  for (size_t i = 0; i <= lambda; ++i) {
    modulus[i] = static_cast<uint32_t>(e % p);
    e /= p;
  }
  if (e != 0) throw IoError("modulus encoding has degree above lambda");
  return FieldSpec::make(static_cast<uint32_t>(p), static_cast<uint32_t>(lambda), modulus);
}

namespace {

MatrixF read_matrix_body(std::istream& in, const FieldPtr& spec) {
  auto dims = tokenize_numbers(require_line(in, "matrix dimensions"));
  if (dims.size() != 2) throw IoError("matrix dimension line must hold two numbers");
  size_t rows = dims[0], cols = dims[1];
  MatrixF m(spec, rows, cols);
  for (size_t r = 0; r < rows && cols > 0; ++r) {
    auto vals = tokenize_numbers(require_line(in, "matrix row"));
    if (vals.size() != cols) throw IoError("matrix row has wrong number of entries");
    for (size_t c = 0; c < cols; ++c) {
      if (vals[c] >= spec->order()) throw IoError("matrix entry out of field range");
      m.set(r, c, static_cast<uint32_t>(vals[c]));
    }
  }
  return m;
}

void write_matrix_body(std::ostream& out, const MatrixF& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (size_t r = 0; r < m.rows() && m.cols() > 0; ++r) {
    for (size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
}

}  // namespace

void write_matrix(std::ostream& out, const MatrixF& m) {
  out << field_line(*m.spec()) << '\n';
  write_matrix_body(out, m);
}

MatrixF read_matrix(std::istream& in) {
  FieldPtr spec = parse_field_line(require_line(in, "field line"));
  return read_matrix_body(in, spec);
}

void write_vector(std::ostream& out, const VectorF& v) {
  out << field_line(*v.spec) << '\n';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v.v[i];
  }
  out << '\n';
}

VectorF read_vector(std::istream& in) {
  FieldPtr spec = parse_field_line(require_line(in, "field line"));
  auto vals = tokenize_numbers(require_line(in, "vector line"));
  std::vector<uint32_t> enc;
  enc.reserve(vals.size());
  for (uint64_t v : vals) {
    if (v >= spec->order()) throw IoError("vector entry out of field range");
    enc.push_back(static_cast<uint32_t>(v));
  }
  return VectorF(spec, std::move(enc));
}

void write_scheme(std::ostream& out, const PsmcScheme& scheme) {
  out << field_line(*scheme.spec()) << '\n';
  out << scheme.n() << ' ' << scheme.u() << ' ' << scheme.t() << ' ' << scheme.l() << ' '
      << scheme.k1() << ' ' << scheme.r() << '\n';
  write_matrix_body(out, scheme.h0());
  write_matrix_body(out, scheme.p());
}

PsmcScheme read_scheme(std::istream& in, uint64_t budget) {
  FieldPtr spec = parse_field_line(require_line(in, "field line"));
  auto params = tokenize_numbers(require_line(in, "scheme parameter line"));
  if (params.size() != 6) throw IoError("scheme parameter line must hold n u t l k1 r");
  PsmcScheme::Params p{params[0], params[1], params[2], params[3], params[4], params[5]};
  MatrixF h0 = read_matrix_body(in, spec);
  MatrixF pm = read_matrix_body(in, spec);
  return PsmcScheme::build(spec, p, std::move(h0), std::move(pm), budget);
}

namespace {
std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}
std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  return out;
}
}  // namespace

MatrixF read_matrix_file(const std::string& path) {
  auto in = open_in(path);
  return read_matrix(in);
}

void write_matrix_file(const std::string& path, const MatrixF& m) {
  auto out = open_out(path);
  write_matrix(out, m);
}

VectorF read_vector_file(const std::string& path) {
  auto in = open_in(path);
  return read_vector(in);
}

void write_vector_file(const std::string& path, const VectorF& v) {
  auto out = open_out(path);
  write_vector(out, v);
}

PsmcScheme read_scheme_file(const std::string& path, uint64_t budget) {
  auto in = open_in(path);
  return read_scheme(in, budget);
}

void write_scheme_file(const std::string& path, const PsmcScheme& scheme) {
  auto out = open_out(path);
  write_scheme(out, scheme);
}

std::vector<size_t> parse_index_list(const std::string& text) {
  std::vector<size_t> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ':' || c == ' ') {
      if (!cur.empty()) {
        out.push_back(std::stoull(cur));
        cur.clear();
      }
    } else if (c >= '0' && c <= '9') {
      cur.push_back(c);
    } else {
      throw IoError("bad index list: " + text);
    }
  }
  if (!cur.empty()) out.push_back(std::stoull(cur));
  return out;
}

}  // namespace psmc
