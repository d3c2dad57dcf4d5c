#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "relink/error.hpp"

namespace relink {

using Rat = mpq_class;

std::string rat_to_string(const Rat& r);

// Color parameters are interned globally; comparisons are by name so that the
// monomial order does not depend on registration order.
int intern_symbol(const std::string& name);
const std::string& symbol_name(int id);
bool symbol_less(int a, int b);

// Product of symbol powers, exponents > 0, factors sorted by symbol name.
struct Monomial {
  std::vector<std::pair<int, int>> factors;

  bool operator==(const Monomial&) const = default;
  int total_degree() const;
  bool is_one() const { return factors.empty(); }
  std::string to_string() const;

  static Monomial one() { return {}; }
  static Monomial var(int sym, int exp = 1);
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_gcd(const Monomial& a, const Monomial& b);

// Graded lexicographic: total degree first, then exponent vectors compared
// symbol-by-symbol in name order (higher exponent on an earlier name is larger).
bool mono_less(const Monomial& a, const Monomial& b);

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return mono_less(a, b); }
};

// Sparse multivariate polynomial over Q.
class Poly {
public:
  Poly() = default;
  static Poly from_rat(const Rat& r);
  static Poly from_int(long n) { return from_rat(Rat(n)); }
  static Poly var(int sym);
  static Poly var(const std::string& name) { return var(intern_symbol(name)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_rat() const;
  // Constant value; requires is_rat().
  Rat rat_value() const;

  int total_degree() const;  // -1 for zero
  int degree_in(int sym) const;
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat, MonoLess>& terms() const { return terms_; }
  // Largest monomial in graded-lex order with its coefficient; requires nonzero.
  std::pair<Monomial, Rat> leading() const;

  void add_term(const Monomial& m, const Rat& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly mul_rat(const Rat& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Exact division; throws Error if not divisible.
  Poly divide_exact(const Poly& d) const;

  std::vector<int> symbols() const;
  // Coefficient polynomials with respect to one symbol.
  std::map<int, Poly> coeffs_in(int sym) const;
  Poly substitute(const std::map<int, Poly>& env) const;

  std::string to_string() const;

private:
  std::map<Monomial, Rat, MonoLess> terms_;
};

Poly poly_pow(const Poly& p, int e);
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace relink
