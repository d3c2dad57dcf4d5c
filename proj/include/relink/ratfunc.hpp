#pragma once

#include <map>
#include <string>

#include "relink/poly.hpp"

namespace relink {

// Rational function in the color symbols, kept reduced with a monic
// denominator at all times.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::from_int(1)) {}
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc from_rat(const Rat& r) { return RatFunc(Poly::from_rat(r), Poly::from_int(1)); }
  static RatFunc from_int(long v) { return from_rat(Rat(v)); }
  static RatFunc var(const std::string& name) {
    return RatFunc(Poly::var(intern_symbol(name)), Poly::from_int(1));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_rat() const { return num_.is_rat() && den_.is_rat(); }
  Rat rat_value() const;
  bool is_poly() const { return den_.is_rat(); }
  Poly poly_value() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc substitute(const std::map<int, Poly>& env) const;

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

RatFunc ratfunc_pow(const RatFunc& f, int e);

}  // namespace relink
