#pragma once

#include <map>
#include <string>

#include "relink/ratfunc.hpp"

namespace relink {

// Truncation order shared by every series built afterwards.  A series of
// truncation order N has known coefficients strictly below h^N.
int series_trunc_order();
void set_series_trunc_order(int n);

// Truncated Laurent series in h with coefficients in the color field.
// Coefficients below min_order are exactly zero, coefficients in
// [min_order, known_order) are stored exactly, and everything at or above
// known_order is unknown.  Arithmetic tracks the window honestly, so asking
// for a coefficient the operands cannot determine is an error rather than a
// silent zero.
class Series {
 public:
  Series();

  static Series from_rat(const Rat& r);
  static Series from_int(long v) { return from_rat(Rat(v)); }
  static Series from_ratfunc(const RatFunc& f);
  static Series h_power(int k);
  // Zero with an explicit window, i.e. a bare O(h^k).
  static Series order_term(int k);

  // All coefficients known and zero.
  bool is_exact_zero() const;
  // Alias used by generic scalar code; only structurally exact zeros qualify,
  // so window information is never dropped by sparse shortcuts.
  bool is_zero() const { return is_exact_zero(); }
  // Every coefficient inside the window is zero (the series may still hide
  // something beyond known_order).
  bool is_zero_within_window() const;

  int min_order() const { return min_; }
  int known_order() const { return hi_; }
  // Smallest exponent with a nonzero coefficient; known_order() if none.
  int low_order() const;

  // Throws a truncation error at or above known_order().
  RatFunc coefficient(int k) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator/(const Series& o) const;
  Series operator-() const;
  bool operator==(const Series& o) const;
  bool operator!=(const Series& o) const { return !(*this == o); }

  Series mul_ratfunc(const RatFunc& f) const;
  Series shift(int k) const;
  Series inverse() const;

  Series substitute(const std::map<int, Poly>& env) const;

  std::string to_string() const;

  static constexpr int kExactOrder = 1 << 20;

 private:
  std::map<int, RatFunc> coeffs_;
  int min_;
  int hi_;

  void set_coeff(int k, const RatFunc& f);
  friend Series exp_h(const RatFunc& u);
};

// exp(u h) up to the shared truncation order.
Series exp_h(const RatFunc& u);
Series series_pow(const Series& s, int e);

}  // namespace relink
