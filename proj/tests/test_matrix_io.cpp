#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "cli/matrix_io.hpp"
#include "psdapprox/random.hpp"

using namespace psdapprox;
using namespace psdapprox::cli;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_matrix(text, "doc");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("parse_matrix examples") {
  const MatrixFile id = parse_matrix(R"({"rows":2,"cols":2,"data":[[1,0],[0,0],[0,0],[1,0]]})", "doc");
  CHECK(id.matrix == MatrixC::identity(2));
  CHECK_FALSE(id.dims.has_value());

  const std::string short_data = error_of(R"({"rows":2,"cols":2,"data":[[1,0],[0,0],[0,0]]})");
  CHECK(contains(short_data, "first missing index is 3"));

  const std::string bad_number = error_of(R"({"rows":1,"cols":1,"data":[[0,"x"]]})");
  CHECK(contains(bad_number, "data[0]"));
  CHECK(contains(bad_number, "imaginary part is not a number"));
}

TEST_CASE("parse_matrix reports malformed documents precisely") {
  CHECK(contains(error_of(R"({"rows":1,"cols":1,"data":[[0,0]])"), "malformed JSON at byte"));
  CHECK(contains(error_of(R"({"cols":1,"data":[[0,0]]})"), "missing field \"rows\""));
  CHECK(contains(error_of(R"({"rows":0,"cols":1,"data":[]})"), "positive integer"));
  CHECK(contains(error_of(R"({"rows":1,"cols":1,"data":[[0,0],[1,1]]})"), "first surplus index is 1"));
  CHECK(contains(error_of(R"({"rows":1,"cols":1,"data":[[0]]})"), "[re, im] pair"));
  CHECK(contains(error_of(R"({"rows":1,"cols":1,"data":[[1e999,0]]})"), "malformed JSON"));
  CHECK(contains(error_of(R"({"rows":2,"cols":2,"dims":[2,3],"data":[[1,0],[0,0],[0,0],[1,0]]})"),
                 "does not match"));
  CHECK(contains(error_of("[1, 2]"), "must be a JSON object"));
  // The source name leads every message.
  CHECK(error_of("{}").rfind("doc: ", 0) == 0);
}

TEST_CASE("dims annotation is read and written") {
  const MatrixFile f = parse_matrix(
      R"({"rows":4,"cols":4,"dims":[2,2],"data":[[1,0],[0,0],[0,0],[0,0],[0,0],[1,0],[0,0],[0,0],[0,0],[0,0],[1,0],[0,0],[0,0],[0,0],[0,0],[1,0]]})",
      "doc");
  REQUIRE(f.dims.has_value());
  CHECK(*f.dims == BipartiteDims{2, 2});
  CHECK(contains(serialize_matrix(f.matrix, f.dims), "\"dims\":[2,2]"));
}

TEST_CASE("serialize then parse reproduces every bit") {
  Rng rng(2718);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int trial = 0; trial < 100; ++trial) {
    MatrixC m = random_complex(size(rng), size(rng), rng);
    // Spread the magnitudes so shortest round-trip printing is exercised.
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= std::pow(10.0, exponent(rng));
    if (trial == 0) m(0, 0) = Complex(std::numeric_limits<double>::denorm_min(), -0.0);
    const MatrixFile back = parse_matrix(serialize_matrix(m), "roundtrip");
    REQUIRE(back.matrix.rows() == m.rows());
    REQUIRE(back.matrix.cols() == m.cols());
    for (std::size_t k = 0; k < m.entries().size(); ++k) {
      CHECK(bit_equal(back.matrix.entries()[k].real(), m.entries()[k].real()));
      CHECK(bit_equal(back.matrix.entries()[k].imag(), m.entries()[k].imag()));
    }
  }
}

TEST_CASE("read_matrix_list accepts an array or a single document") {
  const std::string fixture = std::string(PSDAPPROX_FIXTURE_DIR) + "/pauli_x.json";
  CHECK(read_matrix_list(fixture).size() == 1);
  CHECK_THROWS_AS(read_matrix_list(fixture + ".missing"), InputError);
  CHECK_THROWS_AS(read_matrix_file(fixture + ".missing"), InputError);
}
