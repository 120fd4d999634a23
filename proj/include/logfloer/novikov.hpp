#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logfloer/rational.hpp"

namespace logfloer {

// ---------------------------------------------------------------------------
// Novikov field with mod 2 coefficients
// ---------------------------------------------------------------------------
//
// Finite formal sums of powers T^a with rational exponents a and coefficients
// in F2.  Stored as the strictly increasing list of exponents that survive
// mod 2.  Addition is symmetric difference, multiplication is convolution.
// The only units with finite support are single powers of T, so invert()
// expands a geometric series and reports whether it had to truncate.

struct novikov_inverse;

class novikov {
public:
  novikov() = default;

  static novikov zero() { return novikov(); }
  static novikov one() { return monomial(rational(0)); }
  static novikov monomial(const rational& exponent);
  static novikov from_exponents(std::vector<rational> exps);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0] == rational(0);
  }
  // least exponent, empty for zero
  std::optional<rational> valuation() const;

  const std::vector<rational>& terms() const { return terms_; }

  novikov& operator+=(const novikov& o);
  novikov& operator*=(const novikov& o);
  friend novikov operator+(novikov a, const novikov& b) { return a += b; }
  friend novikov operator*(novikov a, const novikov& b) { return a *= b; }
  friend bool operator==(const novikov& a, const novikov& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const novikov& a, const novikov& b) {
    return !(a == b);
  }

  novikov times_monomial(const rational& exponent) const;

  // inverse kept up to exponent cutoff; throws DivisionByZero on zero
  novikov_inverse invert(const rational& cutoff) const;

  // "0", "1", "T", "T^3", "T^{1/2}+T^3"
  std::string str() const;
  static novikov parse(const std::string& text);

private:
  std::vector<rational> terms_;
};

struct novikov_inverse {
  novikov value;
  bool truncated = false;
};

}  // namespace logfloer
