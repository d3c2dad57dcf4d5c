#include "relink/ratfunc.hpp"

#include "relink/error.hpp"

namespace relink {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw division_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly::from_int(1);
    return;
  }
  Poly g = poly_gcd(num, den);
  Poly n = num.divide_exact(g);
  Poly d = den.divide_exact(g);
  Rat lc = d.leading().second;
  num_ = n.mul_rat(Rat(1) / lc);
  den_ = d.mul_rat(Rat(1) / lc);
}

Rat RatFunc::rat_value() const {
  if (!is_rat()) throw internal_error("rat_value on non-constant rational function");
  if (num_.is_zero()) return Rat(0);
  return num_.rat_value() / den_.rat_value();
}

Poly RatFunc::poly_value() const {
  if (!is_poly()) throw internal_error("poly_value on non-polynomial rational function");
  return num_.mul_rat(Rat(1) / den_.rat_value());
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw division_error("rational function division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RatFunc RatFunc::substitute(const std::map<int, Poly>& env) const {
  Poly n = num_.substitute(env);
  Poly d = den_.substitute(env);
  return RatFunc(n, d);
}

std::string RatFunc::to_string() const {
  if (den_.is_rat() && den_.rat_value() == 1) return num_.to_string();
  std::string n = num_.to_string();
  std::string d = den_.to_string();
  if (num_.term_count() > 1) n = "(" + n + ")";
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + " / " + d;
}

RatFunc ratfunc_pow(const RatFunc& f, int e) {
  if (e < 0) return ratfunc_pow(RatFunc::from_int(1) / f, -e);
  RatFunc out = RatFunc::from_int(1);
  for (int i = 0; i < e; ++i) out = out * f;
  return out;
}

}  // namespace relink
