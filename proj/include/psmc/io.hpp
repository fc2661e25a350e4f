#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "psmc/matrix.hpp"
#include "psmc/scheme.hpp"

namespace psmc {

// Text formats.  Lines starting with '#' and blank lines are ignored when
// reading.  Elements are decimal encodings in [0, q).
//
//   field line:   field <p> <lambda> <modulus-encoding>
//   matrix file:  field line, "<rows> <cols>", then one line per row
//   vector file:  field line, one line of encodings
//   scheme file:  field line, "<n> <u> <t> <l> <k1> <r>",
//                 H0 as "<rows> <cols>" + rows, P as "<rows> <cols>" + rows

std::string field_line(const FieldSpec& spec);
FieldPtr parse_field_line(const std::string& line);

void write_matrix(std::ostream& out, const MatrixF& m);
MatrixF read_matrix(std::istream& in);
MatrixF read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const MatrixF& m);

void write_vector(std::ostream& out, const VectorF& v);
VectorF read_vector(std::istream& in);
VectorF read_vector_file(const std::string& path);
void write_vector_file(const std::string& path, const VectorF& v);

void write_scheme(std::ostream& out, const PsmcScheme& scheme);
PsmcScheme read_scheme(std::istream& in, uint64_t budget = kDefaultExhaustiveBudget);
PsmcScheme read_scheme_file(const std::string& path, uint64_t budget = kDefaultExhaustiveBudget);
void write_scheme_file(const std::string& path, const PsmcScheme& scheme);

// comma- or colon-separated unsigned integers, e.g. "1,2,9,14"
std::vector<size_t> parse_index_list(const std::string& text);

}  // namespace psmc
