#include "relink/series.hpp"

#include <algorithm>

#include "relink/error.hpp"

namespace relink {

namespace {
int g_trunc_order = 8;
}

int series_trunc_order() { return g_trunc_order; }

void set_series_trunc_order(int n) {
  if (n < 1) throw config_error("truncation order must be at least 1");
  g_trunc_order = n;
}

Series::Series() : min_(0), hi_(kExactOrder) {}

Series Series::from_rat(const Rat& r) {
  Series s;
  if (r != 0) s.coeffs_[0] = RatFunc::from_rat(r);
  return s;
}

Series Series::from_ratfunc(const RatFunc& f) {
  Series s;
  if (!f.is_zero()) s.coeffs_[0] = f;
  return s;
}

Series Series::h_power(int k) {
  Series s;
  s.coeffs_[k] = RatFunc::from_int(1);
  s.min_ = k;
  return s;
}

Series Series::order_term(int k) {
  Series s;
  s.min_ = k;
  s.hi_ = k;
  return s;
}

bool Series::is_exact_zero() const { return coeffs_.empty() && hi_ == kExactOrder; }

bool Series::is_zero_within_window() const { return coeffs_.empty(); }

int Series::low_order() const {
  if (coeffs_.empty()) return hi_;
  return coeffs_.begin()->first;
}

RatFunc Series::coefficient(int k) const {
  if (k >= hi_)
    throw truncation_error("coefficient of h^" + std::to_string(k) +
                           " requested beyond known order h^" + std::to_string(hi_));
  auto it = coeffs_.find(k);
  if (it == coeffs_.end()) return RatFunc();
  return it->second;
}

void Series::set_coeff(int k, const RatFunc& f) {
  if (f.is_zero())
    coeffs_.erase(k);
  else
    coeffs_[k] = f;
}

Series Series::operator+(const Series& o) const {
  Series out;
  out.min_ = std::min(min_, o.min_);
  out.hi_ = std::min(hi_, o.hi_);
  for (auto& [k, f] : coeffs_)
    if (k < out.hi_) out.coeffs_[k] = f;
  for (auto& [k, f] : o.coeffs_) {
    if (k >= out.hi_) continue;
    auto it = out.coeffs_.find(k);
    if (it == out.coeffs_.end()) {
      out.coeffs_[k] = f;
    } else {
      RatFunc s = it->second + f;
      if (s.is_zero())
        out.coeffs_.erase(it);
      else
        it->second = s;
    }
  }
  return out;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator-() const {
  Series out;
  out.min_ = min_;
  out.hi_ = hi_;
  for (auto& [k, f] : coeffs_) out.coeffs_[k] = -f;
  return out;
}

Series Series::operator*(const Series& o) const {
  Series out;
  long hi = std::min<long>({static_cast<long>(kExactOrder),
                            static_cast<long>(hi_) + o.min_,
                            static_cast<long>(o.hi_) + min_});
  out.hi_ = static_cast<int>(hi);
  out.min_ = min_ + o.min_;
  for (auto& [i, f] : coeffs_) {
    for (auto& [j, g] : o.coeffs_) {
      int k = i + j;
      if (k >= out.hi_) continue;
      auto it = out.coeffs_.find(k);
      RatFunc t = f * g;
      if (it == out.coeffs_.end()) {
        if (!t.is_zero()) out.coeffs_[k] = t;
      } else {
        RatFunc s = it->second + t;
        if (s.is_zero())
          out.coeffs_.erase(it);
        else
          it->second = s;
      }
    }
  }
  return out;
}

Series Series::mul_ratfunc(const RatFunc& f) const {
  Series out;
  out.min_ = min_;
  out.hi_ = hi_;
  if (f.is_zero()) {
    out.min_ = 0;
    return out;
  }
  for (auto& [k, g] : coeffs_) out.coeffs_[k] = g * f;
  return out;
}

Series Series::shift(int k) const {
  Series out;
  out.min_ = min_ + k;
  out.hi_ = (hi_ == kExactOrder) ? kExactOrder : hi_ + k;
  for (auto& [j, f] : coeffs_) out.coeffs_[j + k] = f;
  return out;
}

Series Series::inverse() const {
  if (coeffs_.empty()) {
    if (hi_ == kExactOrder) throw division_error("inverse of the zero series");
    throw truncation_error("inverse of a series with no visible leading term");
  }
  int ord = low_order();
  RatFunc u0 = coeffs_.begin()->second;
  if (hi_ == kExactOrder && coeffs_.size() == 1) {
    Series out;
    out.coeffs_[-ord] = RatFunc::from_int(1) / u0;
    out.min_ = -ord;
    return out;
  }
  int len = (hi_ == kExactOrder) ? series_trunc_order() : hi_ - ord;
  // v = inverse of (series shifted down by ord), a unit with v_0 = 1/u0.
  std::map<int, RatFunc> v;
  RatFunc inv0 = RatFunc::from_int(1) / u0;
  v[0] = inv0;
  for (int k = 1; k < len; ++k) {
    RatFunc acc;
    for (auto& [j, uj] : coeffs_) {
      int jj = j - ord;
      if (jj <= 0 || jj > k) continue;
      auto it = v.find(k - jj);
      if (it == v.end()) continue;
      acc = acc + uj * it->second;
    }
    RatFunc vk = -(inv0 * acc);
    if (!vk.is_zero()) v[k] = vk;
  }
  Series out;
  out.hi_ = (hi_ == kExactOrder) ? series_trunc_order() - ord : hi_ - 2 * ord;
  out.min_ = -ord;
  for (auto& [k, f] : v)
    if (k - ord < out.hi_) out.coeffs_[k - ord] = f;
  return out;
}

Series Series::operator/(const Series& o) const { return *this * o.inverse(); }

bool Series::operator==(const Series& o) const {
  return (*this - o).is_zero_within_window();
}

Series Series::substitute(const std::map<int, Poly>& env) const {
  Series out;
  out.min_ = min_;
  out.hi_ = hi_;
  for (auto& [k, f] : coeffs_) {
    RatFunc g = f.substitute(env);
    if (!g.is_zero()) out.coeffs_[k] = g;
  }
  return out;
}

std::string Series::to_string() const {
  std::string out;
  bool first = true;
  for (auto& [k, f] : coeffs_) {
    std::string c = f.to_string();
    if (c.find(' ') != std::string::npos) c = "(" + c + ")";
    std::string term;
    if (k == 0) {
      term = c;
    } else {
      std::string hp = (k == 1) ? "h" : "h^" + std::to_string(k);
      term = (c == "1") ? hp : c + " * " + hp;
    }
    if (!first) out += " + ";
    out += term;
    first = false;
  }
  if (hi_ != kExactOrder) {
    if (!first) out += " + ";
    out += "O(h^" + std::to_string(hi_) + ")";
  } else if (first) {
    out = "0";
  }
  return out;
}

Series exp_h(const RatFunc& u) {
  Series s;
  s.hi_ = series_trunc_order();
  RatFunc p = RatFunc::from_int(1);
  Rat fact(1);
  for (int k = 0; k < s.hi_; ++k) {
    if (k > 0) {
      p = p * u;
      fact *= k;
    }
    RatFunc c = p * RatFunc::from_rat(Rat(1) / fact);
    if (!c.is_zero()) s.coeffs_[k] = c;
  }
  return s;
}

Series series_pow(const Series& s, int e) {
  if (e < 0) return series_pow(s.inverse(), -e);
  Series out = Series::from_int(1);
  for (int i = 0; i < e; ++i) out = out * s;
  return out;
}

}  // namespace relink
