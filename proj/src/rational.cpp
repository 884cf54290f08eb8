#include "unicyclic/rational.hpp"

#include <climits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace unicyclic {

namespace {

constexpr std::int64_t kSmallMax = INT64_MAX;

bool fits_small(__int128 v) { return v <= kSmallMax && v >= -kSmallMax; }

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
}

unsigned __int128 abs_u128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
}

mpz_class mpz_from_i128(__int128 v) {
  const unsigned __int128 mag = abs_u128(v);
  const auto hi = static_cast<unsigned long>(mag >> 64);
  const auto lo = static_cast<unsigned long>(mag);
  mpz_class out = hi;
  out <<= 64;
  out += lo;
  if (v < 0) out = -out;
  return out;
}

bool mpz_fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z.get_si() != LONG_MIN;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == INT64_MIN) {
    big_ = std::make_unique<mpq_class>(mpz_from_i128(value));
    return;
  }
  num_ = value;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  if (num == INT64_MIN || den == INT64_MIN) {
    assign(mpq_class(mpz_from_i128(num), mpz_from_i128(den)));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = static_cast<std::int64_t>(std::gcd(abs_u64(num), static_cast<std::uint64_t>(den)));
  num_ = num / g;
  den_ = den / g;
}

Rational::Rational(const mpq_class& value) {
  mpq_class copy = value;
  copy.canonicalize();
  assign(std::move(copy));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  if (other.big_) {
    if (big_) {
      *big_ = *other.big_;
    } else {
      big_ = std::make_unique<mpq_class>(*other.big_);
    }
  } else {
    big_.reset();
  }
  return *this;
}

void Rational::assign(mpq_class&& value) {
  if (mpz_fits_small(value.get_num()) && mpz_fits_small(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  if (big_) {
    *big_ = std::move(value);
  } else {
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

void Rational::assign_reduced(__int128 num, __int128 den) {
  if (fits_small(num) && fits_small(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  assign(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  const auto bad = [&] {
    return std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num_digits = body.substr(0, slash);
  const std::string_view den_digits =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  const auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (!all_digits(num_digits) || !all_digits(den_digits)) throw bad();
  mpz_class den(std::string(den_digits), 10);
  if (den == 0) throw bad();
  mpz_class num(std::string(num_digits), 10);
  if (text.front() == '-') num = -num;
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), num_);
  mpz_set_si(q.get_den_mpz_t(), den_);
  return q;
}

mpz_class Rational::numerator() const {
  if (big_) return big_->get_num();
  return mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  if (big_) return big_->get_den();
  return mpz_class(static_cast<long>(den_));
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
  Rational out(*this);
  if (out.big_) {
    out.assign(-*out.big_);
  } else {
    out.num_ = -out.num_;
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (big_ || rhs.big_) {
    assign(to_mpq() + rhs.to_mpq());
    return *this;
  }
  const std::int64_t a = num_, b = den_, c = rhs.num_, d = rhs.den_;
  if (b == d) {
    const __int128 t = static_cast<__int128>(a) + c;
    if (t == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const auto g = static_cast<std::int64_t>(
        std::gcd(static_cast<std::uint64_t>(abs_u128(t) % static_cast<std::uint64_t>(b)),
                 static_cast<std::uint64_t>(b)));
    assign_reduced(t / g, b / g);
    return *this;
  }
  const auto g = static_cast<std::int64_t>(
      std::gcd(static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(d)));
  if (g == 1) {
    assign_reduced(static_cast<__int128>(a) * d + static_cast<__int128>(c) * b,
                   static_cast<__int128>(b) * d);
    return *this;
  }
  const std::int64_t bg = b / g;
  const std::int64_t dg = d / g;
  const __int128 t = static_cast<__int128>(a) * dg + static_cast<__int128>(c) * bg;
  if (t == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  const auto g2 = static_cast<std::int64_t>(
      std::gcd(static_cast<std::uint64_t>(abs_u128(t) % static_cast<std::uint64_t>(g)),
               static_cast<std::uint64_t>(g)));
  assign_reduced(t / g2, static_cast<__int128>(bg) * (d / g2));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) {
    *this = Rational();
    return *this;
  }
  if (big_ || rhs.big_) {
    assign(to_mpq() * rhs.to_mpq());
    return *this;
  }
  const std::int64_t a = num_, b = den_, c = rhs.num_, d = rhs.den_;
  const auto g1 = static_cast<std::int64_t>(std::gcd(abs_u64(a), static_cast<std::uint64_t>(d)));
  const auto g2 = static_cast<std::int64_t>(std::gcd(abs_u64(c), static_cast<std::uint64_t>(b)));
  assign_reduced(static_cast<__int128>(a / g1) * (c / g2),
                 static_cast<__int128>(b / g2) * (d / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  if (big_ || rhs.big_) {
    assign(to_mpq() / rhs.to_mpq());
    return *this;
  }
  Rational reciprocal;
  reciprocal.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
  reciprocal.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
  return *this *= reciprocal;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_one()) {
    *this += b;
    return;
  }
  if (b.is_one()) {
    *this += a;
    return;
  }
  Rational p = a;
  p *= b;
  *this += p;
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
  if (a.big_) return *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace unicyclic
