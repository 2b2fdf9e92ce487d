#include "ybco/rational.hpp"

#include <charconv>
#include <limits>

#include "ybco/errors.hpp"

namespace ybco {

namespace {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();

}  // namespace

Rational Rational::from_wide(i128 n, i128 d) {
  if (d == 0) throw DomainError("ring: division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  if (d != 1) {
    i128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }
  if (n > kMax || n < kMin || d > kMax) {
    throw Overflow("ring: rational coefficient exceeds 64-bit range");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) {
    throw Overflow("ring: rational coefficient exceeds 64-bit range");
  }
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational Rational::inverse() const {
  if (num_ == 0) throw NotAUnit("ring: zero is not invertible");
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t s;
    if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
  }
  return Rational::from_wide(
      static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
      static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t s;
    if (!__builtin_sub_overflow(a.num_, b.num_, &s)) return Rational(s);
  }
  return Rational::from_wide(
      static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
      static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) {
    std::int64_t s;
    if (!__builtin_mul_overflow(a.num_, b.num_, &s)) return Rational(s);
  }
  return Rational::from_wide(static_cast<i128>(a.num_) * b.num_,
                             static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw DomainError("ring: division by zero");
  return Rational::from_wide(static_cast<i128>(a.num_) * b.den_,
                             static_cast<i128>(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) {
      throw Overflow("ring: integer literal exceeds 64-bit range: " + std::string(s));
    }
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
      throw ParseError("ring: bad number '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (a.im.is_zero() && b.im.is_zero()) return Coeff(a.re * b.re);
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw NotAUnit("ring: zero is not invertible");
  if (im.is_zero()) return Coeff(re.inverse());
  Rational n = re * re + im * im;
  return {re / n, -im / n};
}

}  // namespace ybco
