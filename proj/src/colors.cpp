#include "relink/colors.hpp"

#include <sstream>

#include "relink/error.hpp"

namespace relink {

Poly color_value(const std::string& label) {
  if (label.empty()) throw config_error("empty color label");
  if (label.find_first_not_of("-0123456789/") == std::string::npos)
    return Poly::from_rat(Rat(label));
  return Poly::var(label);
}

const Poly& ColorAssignment::color(int comp) const {
  auto it = binding.find(comp);
  if (it == binding.end())
    throw config_error("component " + std::to_string(comp) + " is uncolored");
  return it->second;
}

std::string ColorAssignment::label_of(int comp) const {
  auto it = label.find(comp);
  if (it == label.end())
    throw config_error("component " + std::to_string(comp) + " is uncolored");
  return it->second;
}

void ColorAssignment::bind(int comp, const std::string& text) {
  binding[comp] = color_value(text);
  label[comp] = text;
}

ColorAssignment ColorAssignment::parse(const std::string& algebra,
                                       const std::string& spec) {
  ColorAssignment c;
  c.algebra = algebra;
  if (spec.empty()) return c;
  std::istringstream in(spec);
  std::string item;
  int next = 1;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw config_error("empty entry in color list");
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      c.bind(next++, item);
    } else {
      int comp = 0;
      try {
        comp = std::stoi(item.substr(0, eq));
      } catch (const std::exception&) {
        throw config_error("bad component index in color entry '" + item + "'");
      }
      c.bind(comp, item.substr(eq + 1));
      next = comp + 1;
    }
  }
  return c;
}

}  // namespace relink
