#include "logfloer/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "logfloer/error.hpp"

namespace logfloer {

namespace {

std::int64_t checked(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error(std::string("rational overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

std::int64_t strict_ll(const std::string& text) {
  std::int64_t v = 0;
  const char* b = text.data();
  const char* e = b + text.size();
  auto r = std::from_chars(b, e, v);
  require(r.ec == std::errc() && r.ptr == e, errk::bad_input,
          "not an integer: '" + text + "'");
  return v;
}

}  // namespace

rational::rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  require(d != 0, errk::division_by_zero, "rational with zero denominator");
  reduce();
}

void rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

rational rational::operator-() const {
  rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

rational& rational::operator+=(const rational& o) {
  __int128 n = static_cast<__int128>(num_) * o.den_ +
               static_cast<__int128>(o.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  num_ = checked(n, "+");
  den_ = checked(d, "+");
  reduce();
  return *this;
}

rational& rational::operator-=(const rational& o) { return *this += -o; }

rational& rational::operator*=(const rational& o) {
  __int128 n = static_cast<__int128>(num_) * o.num_;
  __int128 d = static_cast<__int128>(den_) * o.den_;
  num_ = checked(n, "*");
  den_ = checked(d, "*");
  reduce();
  return *this;
}

rational& rational::operator/=(const rational& o) {
  require(o.num_ != 0, errk::division_by_zero, "rational division by zero");
  rational inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  if (inv.den_ < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return *this *= inv;
}

bool operator<(const rational& a, const rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <
         static_cast<__int128>(b.num_) * a.den_;
}

std::string rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

rational rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return rational(strict_ll(text));
  std::int64_t n = strict_ll(text.substr(0, slash));
  std::int64_t d = strict_ll(text.substr(slash + 1));
  return rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const rational& r) {
  return os << r.str();
}

}  // namespace logfloer
