#include "relink/expr.hpp"

#include <cctype>

#include "relink/error.hpp"

namespace relink {

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw parse_error("bad expression near position " + std::to_string(pos) + ": " + what +
                      " in \"" + text + "\"");
  }

  long read_int() {
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  std::string read_name() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected name");
    return text.substr(start, pos - start);
  }

  Series parse_expr() {
    Series acc = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc = acc + parse_term();
      } else if (c == '-') {
        ++pos;
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Series parse_term() {
    Series acc = parse_factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        acc = acc * parse_factor();
      } else if (c == '/') {
        ++pos;
        acc = acc / parse_factor();
      } else {
        return acc;
      }
    }
  }

  Series parse_factor() {
    if (eat('-')) return -parse_factor();
    Series base = parse_primary();
    if (eat('^')) {
      long e;
      if (eat('(')) {
        e = read_int();
        if (!eat(')')) fail("expected ')'");
      } else {
        e = read_int();
      }
      return series_pow(base, static_cast<int>(e));
    }
    return base;
  }

  Series parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Series inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Series::from_int(read_int());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = read_name();
      if (name == "h") return Series::h_power(1);
      if (name == "O") return parse_order_tail();
      if (name == "exp_h") {
        if (!eat('(')) fail("expected '(' after exp_h");
        Series arg = parse_expr();
        if (!eat(')')) fail("expected ')'");
        return exp_h(exact_value(arg, "exp_h argument"));
      }
      return Series::from_ratfunc(RatFunc::var(name));
    }
    fail("unexpected character");
  }

  Series parse_order_tail() {
    if (!eat('(')) fail("expected '(' after O");
    skip_ws();
    std::string name = read_name();
    if (name != "h") fail("expected h inside O(...)");
    long k = 1;
    if (eat('^')) k = read_int();
    if (!eat(')')) fail("expected ')'");
    return Series::order_term(static_cast<int>(k));
  }

  static RatFunc exact_value(const Series& s, const std::string& what) {
    if (s.known_order() != Series::kExactOrder) throw parse_error(what + " must not involve h");
    if (s.is_zero_within_window()) return RatFunc();
    RatFunc c0 = s.low_order() == 0 ? s.coefficient(0) : RatFunc();
    if (c0.is_zero() || !(s - Series::from_ratfunc(c0)).is_exact_zero())
      throw parse_error(what + " must not involve h");
    return c0;
  }
};

}  // namespace

Series parse_series_expr(const std::string& text) {
  Parser p(text);
  Series s = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return s;
}

RatFunc parse_ratfunc_expr(const std::string& text) {
  Series s = parse_series_expr(text);
  return Parser::exact_value(s, "expression");
}

}  // namespace relink
