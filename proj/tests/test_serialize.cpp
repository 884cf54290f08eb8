#include <random>

#include "doctest.h"
#include "unicyclic/errors.hpp"
#include "unicyclic/serialize.hpp"

using namespace unicyclic;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng) {
  RationalMatrix m(1 + rng() % 6, 1 + rng() % 6);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto num = static_cast<std::int64_t>(rng() % 201) - 100;
      m(i, j) = Rational(num, static_cast<std::int64_t>(1 + rng() % 40));
    }
  }
  return m;
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("matrix_to_json layout") {
    const RationalMatrix m{{Rational(1, 2), 0}, {-3, Rational(-5, 36)}};
    CHECK(matrix_to_json(m).dump() ==
          R"({"cols":2,"entries":[["1/2","0"],["-3","-5/36"]],"rows":2})");
  }

  TEST_CASE("json and csv round trips") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      const RationalMatrix m = random_matrix(rng);
      CHECK(matrix_from_json(nlohmann::json::parse(matrix_to_json(m).dump())) == m);
      CHECK(matrix_from_csv(matrix_to_csv(m)) == m);
    }
  }

  TEST_CASE("big entries survive a round trip") {
    RationalMatrix m(1, 1);
    m(0, 0) = Rational::parse("123456789012345678901234567890/7");
    CHECK(matrix_from_csv(matrix_to_csv(m)) == m);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
  }

  TEST_CASE("malformed json is rejected") {
    using nlohmann::json;
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([1,2])")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1})")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[["1"]]})")),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":2,"cols":1,"entries":[["1"]]})")),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["1/0"]]})")),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[[true]]})")),
                    ParseError);
  }

  TEST_CASE("malformed csv is rejected") {
    CHECK_THROWS_AS(matrix_from_csv("1,2\n3\n"), ParseError);
    CHECK_THROWS_AS(matrix_from_csv("1,x\n"), ParseError);
  }

  TEST_CASE("labelled_csv") {
    const RationalMatrix m{{1, Rational(1, 2)}};
    CHECK(labelled_csv("H", m, {"e1"}, {"1", "2"}) == "H,1,2\ne1,1,1/2\n");
    CHECK_THROWS_AS(labelled_csv("H", m, {"e1", "e2"}, {"1", "2"}), DimensionError);
  }
}
