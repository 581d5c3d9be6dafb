#include "antipath/bound.hpp"

#include <numeric>
#include <stdexcept>

namespace antipath {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }

bool less(std::int64_t value, const Rational& r) { return value * r.den < r.num; }
bool less_equal(std::int64_t value, const Rational& r) { return value * r.den <= r.num; }

DegreeBound DegreeBound::at_least(Rational value) { return DegreeBound(value, false); }
DegreeBound DegreeBound::above(Rational value) { return DegreeBound(value, true); }

bool DegreeBound::holds(std::int64_t degree) const {
  return strict_ ? !less_equal(degree, value_) : !less(degree, value_);
}

std::int64_t DegreeBound::min_degree() const {
  const std::int64_t d = strict_ ? value_.floor() + 1 : value_.ceil();
  return d < 0 ? 0 : d;
}

std::string DegreeBound::to_string() const { return (strict_ ? "> " : ">= ") + value_.to_string(); }

DegreeBound default_bound(int k) { return DegreeBound::at_least(Rational(3 * std::int64_t{k} - 2, 4)); }
DegreeBound half_bound(int k) { return DegreeBound::above(Rational(k, 2)); }
DegreeBound dense_bound(int k) { return DegreeBound::above(Rational(3 * std::int64_t{k} - 4, 4)); }

}  // namespace antipath
