#include <sstream>

#include "doctest.h"
#include "psmc/errors.hpp"
#include "psmc/example1.hpp"
#include "psmc/io.hpp"
#include "psmc/rng.hpp"

using namespace psmc;

TEST_CASE("field line roundtrip") {
  auto spec = example1::field();
  CHECK(field_line(*spec) == "field 2 2 7");
  auto back = parse_field_line("field 2 2 7");
  CHECK(back->same_field(*spec));
  CHECK_THROWS_AS(parse_field_line("matrix 2 2 7"), IoError);
  CHECK_THROWS_AS(parse_field_line("field 2 2"), IoError);
  CHECK_THROWS_AS(parse_field_line("field 2 2 99"), IoError);  // degree too high
}

TEST_CASE("matrix files roundtrip bit-exactly") {
  SplitMix64 rng(404);
  for (auto spec : {FieldSpec::make(2, 2), FieldSpec::make(3, 2)}) {
    MatrixF m(spec, 5, 7);
    for (size_t r = 0; r < 5; ++r) {
      for (size_t c = 0; c < 7; ++c) m.set(r, c, static_cast<uint32_t>(rng.below(spec->order())));
    }
    std::stringstream buf;
    write_matrix(buf, m);
    std::string first = buf.str();
    MatrixF back = read_matrix(buf);
    CHECK(back == m);
    std::stringstream buf2;
    write_matrix(buf2, back);
    CHECK(buf2.str() == first);
  }
}

TEST_CASE("comments and blank lines are skipped") {
  std::stringstream in(
      "# a generator matrix\n"
      "\n"
      "field 2 2 7\n"
      "# dimensions follow\n"
      "2 3\n"
      "1 0 2\n"
      "\n"
      "0 1 3\n");
  MatrixF m = read_matrix(in);
  CHECK(m.rows() == 2);
  CHECK(m.at(0, 2) == 2);
  CHECK(m.at(1, 2) == 3);
}

TEST_CASE("malformed matrix input is rejected") {
  std::stringstream short_row("field 2 2 7\n2 3\n1 0 2\n0 1\n");
  CHECK_THROWS_AS(read_matrix(short_row), IoError);
  std::stringstream out_of_range("field 2 2 7\n1 2\n1 7\n");
  CHECK_THROWS_AS(read_matrix(out_of_range), IoError);
  std::stringstream truncated("field 2 2 7\n2 3\n1 0 2\n");
  CHECK_THROWS_AS(read_matrix(truncated), IoError);
  std::stringstream junk("field 2 2 7\n1 2\n1 x\n");
  CHECK_THROWS_AS(read_matrix(junk), IoError);
}

TEST_CASE("vector files") {
  auto spec = example1::field();
  VectorF v(spec, {3, 0, 2, 1});
  std::stringstream buf;
  write_vector(buf, v);
  CHECK(buf.str() == "field 2 2 7\n3 0 2 1\n");
  CHECK(read_vector(buf) == v);
}

TEST_CASE("scheme files roundtrip through validation") {
  auto scheme = example1::build_scheme();
  std::stringstream buf;
  write_scheme(buf, scheme);
  PsmcScheme back = read_scheme(buf);
  CHECK(back.n() == scheme.n());
  CHECK(back.u() == scheme.u());
  CHECK(back.t() == scheme.t());
  CHECK(back.h0() == scheme.h0());
  CHECK(back.p() == scheme.p());
  CHECK(back.code().generator() == scheme.code().generator());

  // the reader runs the full validation
  std::stringstream bad;
  write_scheme(bad, scheme);
  std::string text = bad.str();
  // bump t beyond what d = 3 supports
  size_t pos = text.find("14 4 1 4 6 4");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 12, "14 4 2 4 6 4");
  std::stringstream bad_in(text);
  CHECK_THROWS_AS(read_scheme(bad_in), ValidationError);
}

TEST_CASE("index lists") {
  CHECK(parse_index_list("1,2,9,14") == std::vector<size_t>{1, 2, 9, 14});
  CHECK(parse_index_list("3") == std::vector<size_t>{3});
  CHECK(parse_index_list("") == std::vector<size_t>{});
  CHECK_THROWS_AS(parse_index_list("1,a"), IoError);
}
