#pragma once

#include <string>

#include "relink/series.hpp"

namespace relink {

// Small expression grammar shared by the data files and the printed series:
// integers, color symbols, h, + - * / ^, exp_h(...), and an O(h^k) tail.
Series parse_series_expr(const std::string& text);

// Same grammar restricted to expressions with an exact h^0 value.
RatFunc parse_ratfunc_expr(const std::string& text);

}  // namespace relink
