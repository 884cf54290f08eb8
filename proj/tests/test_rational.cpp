#include <cstdint>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "unicyclic/rational.hpp"

using unicyclic::Rational;

namespace {

// Reduced, positive denominator, inline exactly when both parts fit.
bool canonical(const Rational& r) {
  const mpq_class q = r.to_mpq();
  mpq_class reduced = q;
  reduced.canonicalize();
  const bool fits = mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t()) &&
                    q.get_num() != mpz_class(LONG_MIN) && q.get_den() != mpz_class(LONG_MIN);
  return q == reduced && gcd(q.get_num(), q.get_den()) == 1 && q.get_den() > 0 &&
         r.is_small() == fits;
}

}  // namespace

TEST_SUITE("exact_arith") {
  TEST_CASE("construction reduces and normalises sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, -5) == Rational(0));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-24, 36).str() == "-2/3");
    CHECK(Rational(36, 36).str() == "1");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  }

  TEST_CASE("basic arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(-4, 9) == Rational(-3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  }

  TEST_CASE("parse and print") {
    CHECK(Rational::parse("17/36") == Rational(17, 36));
    CHECK(Rational::parse("-24/36") == Rational(-2, 3));
    CHECK(Rational::parse(" 5 ") == Rational(5));
    CHECK(Rational::parse("123456789012345678901234567890/3").str() ==
          "41152263004115226300411522630");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1//2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("+3"), std::invalid_argument);
  }

  TEST_CASE("overflow promotes to big storage and results demote again") {
    const Rational big = Rational(INT64_MAX) * Rational(INT64_MAX);
    CHECK_FALSE(big.is_small());
    CHECK(big.to_mpq() == mpq_class(mpz_class(INT64_MAX) * mpz_class(INT64_MAX)));
    const Rational back = big / Rational(INT64_MAX);
    CHECK(back.is_small());
    CHECK(back == Rational(INT64_MAX));
    CHECK(Rational(INT64_MIN).to_mpq() == mpq_class(mpz_class(std::to_string(INT64_MIN))));
    CHECK(Rational(INT64_MIN) + Rational(1) == Rational(INT64_MIN + 1));
    CHECK((Rational(1, INT64_MAX) + Rational(1, INT64_MAX - 1)).to_mpq() ==
          mpq_class(1, INT64_MAX) + mpq_class(1, INT64_MAX - 1));
  }

  TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(INT64_MAX) * Rational(3) > Rational(INT64_MAX));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(-3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
  }

  TEST_CASE("reduction invariant holds over random operand streams (GMP oracle)") {
    std::mt19937_64 rng(20261017);
    // Mix of tiny values and values near the 64-bit boundary.
    const auto draw = [&]() -> std::int64_t {
      switch (rng() % 4) {
        case 0:
          return static_cast<std::int64_t>(rng() % 41) - 20;
        case 1:
          return static_cast<std::int64_t>(rng() % 2000001) - 1000000;
        case 2:
          return static_cast<std::int64_t>(rng() >> 1) * ((rng() & 1) ? 1 : -1);
        default:
          return static_cast<std::int64_t>(rng() >> 33);
      }
    };
    Rational acc(1);
    mpq_class expected(1);
    for (int step = 0; step < 20000; ++step) {
      std::int64_t den = draw();
      if (den == 0) den = 1;
      const std::int64_t num = draw();
      const Rational x(num, den);
      mpq_class qx(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
      qx.canonicalize();
      REQUIRE(x.to_mpq() == qx);
      REQUIRE(canonical(x));
      switch (rng() % 5) {
        case 0:
          acc += x;
          expected += qx;
          break;
        case 1:
          acc -= x;
          expected -= qx;
          break;
        case 2:
          acc *= x;
          expected *= qx;
          break;
        case 3:
          if (!x.is_zero()) {
            acc /= x;
            expected /= qx;
          }
          break;
        default:
          acc.add_product(x, x);
          expected += qx * qx;
      }
      REQUIRE(acc.to_mpq() == expected);
      REQUIRE(canonical(acc));
      // Keep the accumulator from growing without bound.
      if (!acc.is_small() && rng() % 8 == 0) {
        acc = Rational(num % 97, 13);
        expected = acc.to_mpq();
      }
    }
  }
}
