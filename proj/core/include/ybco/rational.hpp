#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ybco {

__extension__ typedef __int128 i128;

// Exact rational with 64-bit numerator and denominator. Every operation is
// overflow-checked and throws ybco::Overflow rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);

  std::string to_string() const;
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(i128 n, i128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Element of Q or Q(i): re + im*i. For rings over Q or Z the imaginary
// part is always zero.
struct Coeff {
  Rational re;
  Rational im;

  Coeff() = default;
  Coeff(Rational r) : re(r) {}  // NOLINT(implicit)
  Coeff(std::int64_t r) : re(r) {}  // NOLINT(implicit)
  Coeff(Rational r, Rational i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_one() const { return re.is_one() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  Coeff operator-() const { return {-re, -im}; }
  Coeff inverse() const;

  friend Coeff operator+(const Coeff& a, const Coeff& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Coeff operator-(const Coeff& a, const Coeff& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend bool operator==(const Coeff&, const Coeff&) = default;
};

}  // namespace ybco
