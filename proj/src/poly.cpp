#include "relink/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace relink {

namespace {

struct SymbolTable {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

int intern_symbol(const std::string& name) {
  if (name.empty()) throw internal_error("empty symbol name");
  auto& t = table();
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  int id = static_cast<int>(t.names.size());
  t.names.push_back(name);
  t.ids.emplace(name, id);
  return id;
}

const std::string& symbol_name(int id) {
  auto& t = table();
  if (id < 0 || id >= static_cast<int>(t.names.size())) throw internal_error("bad symbol id");
  return t.names[id];
}

bool symbol_less(int a, int b) { return symbol_name(a) < symbol_name(b); }

int Monomial::total_degree() const {
  int d = 0;
  for (auto& [s, e] : factors) d += e;
  return d;
}

Monomial Monomial::var(int sym, int exp) {
  Monomial m;
  if (exp > 0) m.factors.push_back({sym, exp});
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += symbol_name(factors[i].first);
    if (factors[i].second != 1) out += "^" + std::to_string(factors[i].second);
  }
  return out;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() ||
        (i < a.factors.size() && symbol_less(a.factors[i].first, b.factors[j].first))) {
      out.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() || symbol_less(b.factors[j].first, a.factors[i].first)) {
      out.factors.push_back(b.factors[j++]);
    } else {
      out.factors.push_back({a.factors[i].first, a.factors[i].second + b.factors[j].second});
      ++i;
      ++j;
    }
  }
  return out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  size_t j = 0;
  for (auto& [s, e] : a.factors) {
    while (j < b.factors.size() && symbol_less(b.factors[j].first, s)) ++j;
    if (j == b.factors.size() || b.factors[j].first != s || b.factors[j].second < e) return false;
  }
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial out;
  size_t i = 0;
  for (auto& [s, e] : b.factors) {
    int rem = e;
    if (i < a.factors.size() && a.factors[i].first == s) {
      rem -= a.factors[i].second;
      ++i;
    } else if (i < a.factors.size() && !symbol_less(s, a.factors[i].first) &&
               !symbol_less(a.factors[i].first, s)) {
      ++i;
    }
    if (rem < 0) throw internal_error("mono_div: not divisible");
    if (rem > 0) out.factors.push_back({s, rem});
  }
  if (i != a.factors.size()) throw internal_error("mono_div: not divisible");
  return out;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    if (symbol_less(a.factors[i].first, b.factors[j].first)) {
      ++i;
    } else if (symbol_less(b.factors[j].first, a.factors[i].first)) {
      ++j;
    } else {
      out.factors.push_back({a.factors[i].first, std::min(a.factors[i].second, b.factors[j].second)});
      ++i;
      ++j;
    }
  }
  return out;
}

bool mono_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  size_t i = 0, j = 0;
  while (i < a.factors.size() && j < b.factors.size()) {
    int sa = a.factors[i].first, sb = b.factors[j].first;
    if (symbol_less(sa, sb)) {
      // a has a positive exponent on an earlier symbol, b has zero there
      return false;
    }
    if (symbol_less(sb, sa)) return true;
    if (a.factors[i].second != b.factors[j].second)
      return a.factors[i].second < b.factors[j].second;
    ++i;
    ++j;
  }
  if (i < a.factors.size()) return false;
  if (j < b.factors.size()) return true;
  return false;
}

Poly Poly::from_rat(const Rat& r) {
  Poly p;
  p.add_term(Monomial::one(), r);
  return p;
}

Poly Poly::var(int sym) {
  Poly p;
  p.add_term(Monomial::var(sym), 1);
  return p;
}

bool Poly::is_rat() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.is_one();
}

Rat Poly::rat_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_rat()) throw internal_error("rat_value on non-constant polynomial");
  return terms_.begin()->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.total_degree();
}

int Poly::degree_in(int sym) const {
  int d = -1;
  for (auto& [m, c] : terms_) {
    int e = 0;
    for (auto& [s, x] : m.factors)
      if (s == sym) e = x;
    d = std::max(d, e);
  }
  return terms_.empty() ? -1 : d;
}

std::pair<Monomial, Rat> Poly::leading() const {
  if (terms_.empty()) throw internal_error("leading of zero polynomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out;
  for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) out.add_term(mono_mul(m1, m2), c1 * c2);
  return out;
}

Poly Poly::mul_rat(const Rat& c) const {
  Poly out;
  if (c == 0) return out;
  for (auto& [m, x] : terms_) out.terms_.emplace(m, x * c);
  return out;
}

Poly Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw division_error("polynomial division by zero");
  Poly q;
  Poly r = *this;
  auto [dm, dc] = d.leading();
  while (!r.is_zero()) {
    auto [rm, rc] = r.leading();
    if (!mono_divides(dm, rm)) throw internal_error("divide_exact: not divisible");
    Monomial qm = mono_div(rm, dm);
    Rat qc = rc / dc;
    Poly t;
    t.add_term(qm, qc);
    q = q + t;
    r = r - t * d;
  }
  return q;
}

std::vector<int> Poly::symbols() const {
  std::vector<int> out;
  for (auto& [m, c] : terms_)
    for (auto& [s, e] : m.factors)
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  std::sort(out.begin(), out.end(), symbol_less);
  return out;
}

std::map<int, Poly> Poly::coeffs_in(int sym) const {
  std::map<int, Poly> out;
  for (auto& [m, c] : terms_) {
    int e = 0;
    Monomial rest;
    for (auto& [s, x] : m.factors) {
      if (s == sym)
        e = x;
      else
        rest.factors.push_back({s, x});
    }
    out[e].add_term(rest, c);
  }
  return out;
}

Poly Poly::substitute(const std::map<int, Poly>& env) const {
  Poly out;
  for (auto& [m, c] : terms_) {
    Poly term = Poly::from_rat(c);
    for (auto& [s, e] : m.factors) {
      auto it = env.find(s);
      Poly base = (it == env.end()) ? Poly::var(s) : it->second;
      term = term * poly_pow(base, e);
    }
    out = out + term;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    bool neg = c < 0;
    Rat ab = neg ? Rat(-c) : c;
    std::string body;
    if (it->first.is_one()) {
      body = rat_to_string(ab);
    } else if (ab == 1) {
      body = it->first.to_string();
    } else {
      body = rat_to_string(ab) + "*" + it->first.to_string();
    }
    if (first) {
      out += (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

Poly poly_pow(const Poly& p, int e) {
  if (e < 0) throw internal_error("poly_pow: negative exponent");
  Poly out = Poly::from_int(1);
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

namespace {

using Rec = std::map<int, Poly>;  // degree in main symbol -> coefficient

int rec_deg(const Rec& r) { return r.empty() ? -1 : r.rbegin()->first; }

const Poly& rec_lc(const Rec& r) { return r.rbegin()->second; }

void rec_trim(Rec& r) {
  for (auto it = r.begin(); it != r.end();) {
    if (it->second.is_zero())
      it = r.erase(it);
    else
      ++it;
  }
}

Rec rec_scale(const Rec& r, const Poly& c, int shift) {
  Rec out;
  for (auto& [d, p] : r) {
    Poly q = p * c;
    if (!q.is_zero()) out[d + shift] = q;
  }
  return out;
}

Rec rec_sub(const Rec& a, const Rec& b) {
  Rec out = a;
  for (auto& [d, p] : b) {
    auto it = out.find(d);
    if (it == out.end())
      out[d] = -p;
    else
      it->second = it->second - p;
  }
  rec_trim(out);
  return out;
}

Poly rec_to_poly(const Rec& r, int sym) {
  Poly out;
  for (auto& [d, p] : r) {
    Poly t = p * poly_pow(Poly::var(sym), d);
    out = out + t;
  }
  return out;
}

// Pseudo-remainder of a by b in the main symbol.
Rec rec_prem(Rec a, const Rec& b) {
  int db = rec_deg(b);
  while (rec_deg(a) >= db) {
    Rec t = rec_scale(b, rec_lc(a), rec_deg(a) - db);
    a = rec_sub(rec_scale(a, rec_lc(b), 0), t);
  }
  return a;
}

Poly poly_monic(const Poly& p) {
  if (p.is_zero()) return p;
  Rat lc = p.leading().second;
  return p.mul_rat(Rat(1) / lc);
}

Poly content_of(const Rec& r) {
  Poly g;
  for (auto& [d, p] : r) g = poly_gcd(g, p);
  return g;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return poly_monic(b);
  if (b.is_zero()) return poly_monic(a);
  if (a.is_rat() || b.is_rat()) return Poly::from_int(1);

  std::vector<int> syms = a.symbols();
  for (int s : b.symbols())
    if (std::find(syms.begin(), syms.end(), s) == syms.end()) syms.push_back(s);
  std::sort(syms.begin(), syms.end(), symbol_less);
  int main = syms.back();

  Rec ra, rb;
  for (auto& [d, p] : a.coeffs_in(main)) ra[d] = p;
  for (auto& [d, p] : b.coeffs_in(main)) rb[d] = p;
  rec_trim(ra);
  rec_trim(rb);

  Poly ca = content_of(ra);
  Poly cb = content_of(rb);
  Poly cont = poly_gcd(ca, cb);

  Rec pa, pb;
  for (auto& [d, p] : ra) pa[d] = p.divide_exact(ca);
  for (auto& [d, p] : rb) pb[d] = p.divide_exact(cb);

  if (rec_deg(pa) < rec_deg(pb)) std::swap(pa, pb);
  while (!pb.empty()) {
    Rec r = rec_prem(pa, pb);
    pa = pb;
    if (r.empty()) {
      pb.clear();
    } else {
      Poly cr = content_of(r);
      Rec pr;
      for (auto& [d, p] : r) pr[d] = p.divide_exact(cr);
      pb = pr;
    }
  }

  Poly pp = rec_to_poly(pa, main);
  return poly_monic(cont * pp);
}

}  // namespace relink
