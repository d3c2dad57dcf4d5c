#pragma once

#include "relink/chords.hpp"
#include "relink/colors.hpp"
#include "relink/ratfunc.hpp"
#include "relink/ribbon.hpp"
#include "relink/superalg.hpp"

namespace relink {

// Classical weight systems: a colored chord diagram is compiled into a word
// of tensor tiles (duality maps, symmetry flips, one Casimir insertion per
// chord) and contracted by the shared engine over rational functions of the
// colors.

// Value of the diagram as a linear map. A closed skeleton gives a 1x1
// matrix; a skeleton with one interval gives a square matrix on the
// interval component's module. Every component must carry a color.
Mat evaluate_G(const ColorAssignment& colors, const ChordDiagram& d);

// Scalar of evaluate_G on a one-interval diagram. Throws a validation
// error if the map is not a scalar multiple of the identity.
RatFunc what_W(const ColorAssignment& colors, const ChordDiagram& d);

// Renormalized closed evaluation: cuts the chosen component open and scales
// the resulting what_W by the leading normalization constant of its color.
// The cut component's color must be typical.
RatFunc w_prime(const RibbonDatum& rd, const ColorAssignment& colors,
                const ChordDiagram& d, int comp);

}  // namespace relink
