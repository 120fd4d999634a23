#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace logfloer {

// ---------------------------------------------------------------------------
// exact rational arithmetic
// ---------------------------------------------------------------------------
//
// Areas, periods and Novikov exponents are all rational.  We keep them exact:
// int64 numerator over positive int64 denominator, always reduced.  Products
// go through 128-bit intermediates and overflow aborts loudly instead of
// wrapping.

class rational {
public:
  rational() : num_(0), den_(1) {}
  rational(std::int64_t n) : num_(n), den_(1) {}
  rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  rational operator-() const;
  rational& operator+=(const rational& o);
  rational& operator-=(const rational& o);
  rational& operator*=(const rational& o);
  rational& operator/=(const rational& o);

  friend rational operator+(rational a, const rational& b) { return a += b; }
  friend rational operator-(rational a, const rational& b) { return a -= b; }
  friend rational operator*(rational a, const rational& b) { return a *= b; }
  friend rational operator/(rational a, const rational& b) { return a /= b; }

  friend bool operator==(const rational& a, const rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const rational& a, const rational& b) {
    return !(a == b);
  }
  friend bool operator<(const rational& a, const rational& b);
  friend bool operator>(const rational& a, const rational& b) { return b < a; }
  friend bool operator<=(const rational& a, const rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const rational& a, const rational& b) {
    return !(a < b);
  }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }

  // "3", "-1/2"
  std::string str() const;
  static rational parse(const std::string& text);

private:
  std::int64_t num_;
  std::int64_t den_;  // > 0

  void reduce();
};

std::ostream& operator<<(std::ostream& os, const rational& r);

}  // namespace logfloer
