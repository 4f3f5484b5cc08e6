#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "minorstat/construct.hpp"
#include "minorstat/sign_matrix.hpp"
#include "oracles.hpp"

using namespace minorstat;

namespace {

SignMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::int8_t> entries;
  int cols = -1;
  for (const auto& r : rows) {
    cols = static_cast<int>(r.size());
    for (int v : r) entries.push_back(static_cast<std::int8_t>(v));
  }
  return SignMatrix(static_cast<int>(rows.size()), cols, std::move(entries));
}

}  // namespace

TEST_CASE("had format parses character by character") {
  const SignMatrix a = parse_sign_matrix("++\n+-", MatrixFormat::had);
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 2);
  CHECK(a.at(0, 0) == 1);
  CHECK(a.at(0, 1) == 1);
  CHECK(a.at(1, 0) == 1);
  CHECK(a.at(1, 1) == -1);

  const SignMatrix b = parse_sign_matrix("+\n", MatrixFormat::had);
  CHECK(b.rows() == 1);
  CHECK(b.cols() == 1);
  CHECK(b.at(0, 0) == 1);
}

TEST_CASE("had format rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_sign_matrix("++\n+0", MatrixFormat::had),
                       "invalid character at row 2, column 2", ParseError);
  CHECK_THROWS_AS(parse_sign_matrix("++\n+", MatrixFormat::had), ParseError);   // ragged
  CHECK_THROWS_AS(parse_sign_matrix("", MatrixFormat::had), ParseError);        // empty
  CHECK_THROWS_AS(parse_sign_matrix("\n", MatrixFormat::had), ParseError);
  CHECK_THROWS_AS(parse_sign_matrix("+ +\n++", MatrixFormat::had), ParseError); // space
  CHECK_THROWS_AS(parse_sign_matrix("++\r\n++", MatrixFormat::had), ParseError);
  CHECK_THROWS_AS(parse_sign_matrix("++\n\n++", MatrixFormat::had), ParseError);
}

TEST_CASE("had format tolerates exactly one trailing newline") {
  const SignMatrix with = parse_sign_matrix("++\n+-\n", MatrixFormat::had);
  const SignMatrix without = parse_sign_matrix("++\n+-", MatrixFormat::had);
  CHECK(with == without);
  CHECK_THROWS_AS(parse_sign_matrix("++\n+-\n\n", MatrixFormat::had), ParseError);
}

TEST_CASE("had serialization is newline terminated per row") {
  CHECK(serialize_sign_matrix(from_rows({{1, -1}}), MatrixFormat::had) == "+-\n");
  CHECK(serialize_sign_matrix(sylvester(1), MatrixFormat::had) == "++\n+-\n");
}

TEST_CASE("json format round trip and errors") {
  const SignMatrix a = random_sign_matrix(3, 5, 7);
  const std::string text = serialize_sign_matrix(a, MatrixFormat::json);
  CHECK(parse_sign_matrix(text, MatrixFormat::json) == a);

  CHECK_THROWS_AS(parse_sign_matrix("{", MatrixFormat::json), ParseError);
  CHECK_THROWS_AS(parse_sign_matrix("{\"rows\":1,\"cols\":1}", MatrixFormat::json), ParseError);
  CHECK_THROWS_AS(
      parse_sign_matrix("{\"rows\":1,\"cols\":2,\"data\":[[1,0]]}", MatrixFormat::json),
      ParseError);
  CHECK_THROWS_AS(
      parse_sign_matrix("{\"rows\":2,\"cols\":1,\"data\":[[1]]}", MatrixFormat::json),
      ParseError);
}

TEST_CASE("parse o serialize is the identity on both formats") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int rows = 1 + static_cast<int>(splitmix64_at(99, 2 * seed) % 8);
    const int cols = 1 + static_cast<int>(splitmix64_at(99, 2 * seed + 1) % 8);
    const SignMatrix a = random_sign_matrix(rows, cols, seed);
    CHECK(parse_sign_matrix(serialize_sign_matrix(a, MatrixFormat::had), MatrixFormat::had) == a);
    CHECK(parse_sign_matrix(serialize_sign_matrix(a, MatrixFormat::json), MatrixFormat::json) ==
          a);
  }
}

TEST_CASE("SignMatrix validates its invariants") {
  CHECK_THROWS_AS(SignMatrix(2, 2, {1, 1, 1}), ValidationError);
  CHECK_THROWS_AS(SignMatrix(1, 2, {1, 0}), ValidationError);
  CHECK_THROWS_AS(SignMatrix(0, 1, {}), ValidationError);
}

TEST_CASE("is_hadamard basic cases") {
  CHECK(is_hadamard(from_rows({{1, 1}, {1, -1}})));
  CHECK_FALSE(is_hadamard(from_rows({{1, 1}, {1, 1}})));
  CHECK(is_hadamard(from_rows({{1}})));
  CHECK_FALSE(is_hadamard(from_rows({{1, 1, -1}, {1, -1, 1}})));  // non-square
  CHECK_FALSE(is_hadamard(random_sign_matrix(3, 3, 1)));          // odd order > 1

  // Order-4 Sylvester matrix, checked against direct A A^T multiplication.
  const SignMatrix h4 = sylvester(2);
  CHECK(oracle::gram_is_n_times_identity(h4));
  CHECK(is_hadamard(h4));
}

TEST_CASE("is_hadamard agrees with the direct Gram oracle on random input") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 1 + static_cast<int>(splitmix64_at(5, seed) % 8);
    const SignMatrix a = random_sign_matrix(n, n, seed);
    CHECK(is_hadamard(a) == oracle::gram_is_n_times_identity(a));
  }
}

namespace {

SignMatrix transformed(const SignMatrix& a, std::uint64_t seed) {
  const int n = a.rows();
  std::vector<int> rperm(n), cperm(n);
  std::iota(rperm.begin(), rperm.end(), 0);
  std::iota(cperm.begin(), cperm.end(), 0);
  std::uint64_t t = 0;
  for (int i = n - 1; i > 0; --i) {
    std::swap(rperm[i], rperm[splitmix64_at(seed, t++) % (i + 1)]);
    std::swap(cperm[i], cperm[splitmix64_at(seed, t++) % (i + 1)]);
  }
  std::vector<std::int8_t> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int rsign = (splitmix64_at(seed, t + i) & 1) ? -1 : 1;
    for (int j = 0; j < n; ++j) {
      const int csign = (splitmix64_at(seed, t + n + j) & 1) ? -1 : 1;
      entries[static_cast<std::size_t>(i) * n + j] =
          static_cast<std::int8_t>(rsign * csign * a.at(rperm[i], cperm[j]));
    }
  }
  return SignMatrix(n, n, std::move(entries));
}

}  // namespace

TEST_CASE("is_hadamard is invariant under permutations and negations") {
  const SignMatrix h = sylvester(3);
  const SignMatrix r = random_sign_matrix(8, 8, 3);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(is_hadamard(transformed(h, seed)));
    CHECK(is_hadamard(transformed(r, seed)) == is_hadamard(r));
  }
}

TEST_CASE("hadamard order is 1, 2, or divisible by 4") {
  auto feasible = [](int n) { return n == 1 || n == 2 || n % 4 == 0; };
  for (int k = 0; k <= 5; ++k) {
    const SignMatrix h = sylvester(k);
    if (is_hadamard(h)) CHECK(feasible(h.rows()));
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 1 + static_cast<int>(splitmix64_at(11, seed) % 10);
    const SignMatrix a = random_sign_matrix(n, n, seed);
    if (is_hadamard(a)) CHECK(feasible(n));
  }
}
