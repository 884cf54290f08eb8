#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace unicyclic {

/**
 * Exact rational number over arbitrary-precision integers.
 *
 * Values whose reduced numerator and denominator fit in a signed 64-bit word
 * are stored inline; everything else lives in a GMP `mpq_class`. Every value
 * has exactly one representation (always reduced, denominator > 0, inline
 * whenever it fits), so equality is structural.
 *
 * Nearly every entry produced by the combinatorial formulas is tiny, which is
 * why the inline path matters: it keeps dense matrices of millions of entries
 * free of per-entry heap allocations.
 */
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(int value) : Rational(static_cast<std::int64_t>(value)) {}  // NOLINT
  /// Throws std::domain_error when `den == 0`.
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept { return !big_ && den_ == 1; }
  /// True when stored inline (both parts fit in 64 bits).
  bool is_small() const noexcept { return !big_; }
  int sign() const noexcept;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  /// this += a * b, without materialising the product when both are inline.
  void add_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  // Installs an arbitrary mpq value, demoting to inline storage when it fits.
  void assign(mpq_class&& value);
  // Installs an already reduced 128-bit fraction (den > 0), promoting when needed.
  void assign_reduced(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace unicyclic
