#pragma once

#include <cstdint>
#include <string>

namespace antipath {

/// Exact non-negative-denominator fraction. Thresholds in this library are
/// all quarter-integers (k/2, (3k-2)/4, (3k-4)/4, ell/2), so plain int64
/// arithmetic never overflows for any sensible k.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  std::int64_t floor() const;
  std::int64_t ceil() const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);

/// Compare an integer against a rational without rounding.
bool less(std::int64_t value, const Rational& r);
bool less_equal(std::int64_t value, const Rational& r);

/// A lower bound on vertex degrees: either `d >= value` or `d > value`.
class DegreeBound {
 public:
  /// `d >= 0`, satisfied by every degree.
  DegreeBound() = default;
  static DegreeBound at_least(Rational value);
  static DegreeBound above(Rational value);

  bool holds(std::int64_t degree) const;
  /// Smallest non-negative integer satisfying the bound.
  std::int64_t min_degree() const;

  const Rational& value() const { return value_; }
  bool strict() const { return strict_; }
  std::string to_string() const;

  friend bool operator==(const DegreeBound&, const DegreeBound&) = default;

 private:
  DegreeBound(Rational v, bool strict) : value_(v), strict_(strict) {}
  Rational value_;
  bool strict_ = false;
};

/// pseudo-semidegree >= (3k-2)/4: the default search hypothesis.
DegreeBound default_bound(int k);
/// pseudo-semidegree > k/2: the anticycle-extension hypothesis.
DegreeBound half_bound(int k);
/// pseudo-semidegree > (3k-4)/4: what peeling at (3k-4)/4 delivers.
DegreeBound dense_bound(int k);

}  // namespace antipath
