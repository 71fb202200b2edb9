#ifndef CLANS_RATIONAL_HPP
#define CLANS_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "clans/errors.hpp"

namespace clans {

/* Exact fractions over 64-bit integers, always stored reduced with a
   positive denominator. Intermediates run through 128 bits and any
   value that does not fit back into 64 bits after reduction throws
   std::overflow_error instead of wrapping. That is plenty for flags
   and curve samples over small n; nothing here needs bignums.  */
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // implicit by design
  Rational(std::int64_t num, std::int64_t den) {
    normalize(num, den);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  // "n" for integers, "n/d" otherwise.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using i128 = __int128;

  static Rational make(i128 num, i128 den) {
    Rational r;
    r.normalize(num, den);
    return r;
  }

  void normalize(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    unsigned __int128 a = num < 0 ? static_cast<unsigned __int128>(-num)
                                  : static_cast<unsigned __int128>(num);
    unsigned __int128 b = static_cast<unsigned __int128>(den);
    while (b != 0) {
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= static_cast<i128>(a);
      den /= static_cast<i128>(a);
    }
    constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("rational out of 64-bit range");
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Accepts "a" or "a/b" with optional sign, nothing else.
Rational parse_rational(const std::string& text);

}  // namespace clans

#endif  // CLANS_RATIONAL_HPP
