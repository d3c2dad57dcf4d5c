#pragma once

#include <map>
#include <string>

#include "relink/poly.hpp"

namespace relink {

// Assignment of module colors to link components. A color is a polynomial
// value for the bundled family parameter: a symbol (generic typical color),
// a rational, or a discrete module label encoded as a rational.
struct ColorAssignment {
  std::string algebra;
  std::map<int, Poly> binding;       // component -> color value
  std::map<int, std::string> label;  // component -> printable label

  bool has(int comp) const { return binding.count(comp) != 0; }
  const Poly& color(int comp) const;
  std::string label_of(int comp) const;
  void bind(int comp, const std::string& text);

  // "1=a,2=b" or positional "a,b,c" (components numbered from 1).
  static ColorAssignment parse(const std::string& algebra,
                               const std::string& spec);
};

// Turns a color label into a Poly: rationals parse as constants, anything
// else is interned as a symbol.
Poly color_value(const std::string& label);

}  // namespace relink
