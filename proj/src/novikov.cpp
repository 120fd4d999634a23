#include "logfloer/novikov.hpp"

#include <algorithm>
#include <map>

#include "logfloer/error.hpp"

namespace logfloer {

novikov novikov::monomial(const rational& exponent) {
  novikov x;
  x.terms_.push_back(exponent);
  return x;
}

novikov novikov::from_exponents(std::vector<rational> exps) {
  std::map<rational, int> parity;
  for (const auto& e : exps) parity[e] ^= 1;
  novikov x;
  for (const auto& [e, p] : parity)
    if (p) x.terms_.push_back(e);
  return x;
}

std::optional<rational> novikov::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front();
}

novikov& novikov::operator+=(const novikov& o) {
  std::vector<rational> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (*a < *b)
      merged.push_back(*a++);
    else if (*b < *a)
      merged.push_back(*b++);
    else {
      ++a;  // equal exponents cancel mod 2
      ++b;
    }
  }
  merged.insert(merged.end(), a, terms_.end());
  merged.insert(merged.end(), b, o.terms_.end());
  terms_ = std::move(merged);
  return *this;
}

novikov& novikov::operator*=(const novikov& o) {
  std::map<rational, int> parity;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) parity[a + b] ^= 1;
  terms_.clear();
  for (const auto& [e, p] : parity)
    if (p) terms_.push_back(e);
  return *this;
}

novikov novikov::times_monomial(const rational& exponent) const {
  novikov out = *this;
  for (auto& e : out.terms_) e += exponent;
  return out;
}

novikov_inverse novikov::invert(const rational& cutoff) const {
  require(!is_zero(), errk::division_by_zero, "inverting zero");
  rational v = terms_.front();

  // x = T^v (1 + y) with val(y) > 0
  novikov y = times_monomial(-v);
  y += one();
  if (y.is_zero()) return {monomial(-v), false};

  // geometric series for 1/(1+y), keeping exponents <= cutoff + v
  rational limit = cutoff + v;
  auto prune = [&](novikov& x) {
    while (!x.terms_.empty() && limit < x.terms_.back()) x.terms_.pop_back();
  };
  novikov acc = one();
  novikov pow = y;
  prune(pow);
  while (!pow.is_zero()) {
    acc += pow;
    pow *= y;
    prune(pow);
  }
  prune(acc);
  return {acc.times_monomial(-v), true};
}

// ---------------------------------------------------------------------------
// text form
// ---------------------------------------------------------------------------

namespace {

std::string term_str(const rational& e) {
  if (e == rational(0)) return "1";
  if (e == rational(1)) return "T";
  if (e.den() == 1 && e.num() > 0) return "T^" + e.str();
  return "T^{" + e.str() + "}";
}

rational term_parse(const std::string& t) {
  if (t == "1") return rational(0);
  if (t == "T") return rational(1);
  if (t.size() <= 2 || t[0] != 'T' || t[1] != '^')
    throw std::invalid_argument("bad Novikov term '" + t + "'");
  std::string body = t.substr(2);
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
    body = body.substr(1, body.size() - 2);
  return rational::parse(body);
}

}  // namespace

std::string novikov::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += "+";
    out += term_str(terms_[i]);
  }
  return out;
}

novikov novikov::parse(const std::string& text) {
  if (text == "0") return zero();
  std::vector<rational> exps;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t plus = text.find('+', start);
    if (plus == std::string::npos) plus = text.size();
    exps.push_back(term_parse(text.substr(start, plus - start)));
    start = plus + 1;
  }
  return from_exponents(std::move(exps));
}

}  // namespace logfloer
