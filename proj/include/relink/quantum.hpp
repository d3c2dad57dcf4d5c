#pragma once

#include <string>

#include "relink/colors.hpp"
#include "relink/ribbon.hpp"
#include "relink/slice.hpp"
#include "relink/superalg.hpp"

namespace relink {

struct PDLink;

// Invariant value with provenance for report assembly.
struct InvariantSeries {
  Series value;
  std::string link;
  std::string colors;
  int cut = 0;  // 0 for closed evaluations
};

// Ribbon functor on a sliced word: matrix from the bottom boundary space to
// the top one, both ordered tensor products of the colored modules. Refuses
// singular words; the Vassiliev fast path goes through singular_bracket.
SerMat evaluate_F(const RibbonDatum& rd, const ColorAssignment& colors,
                  const SlicedTangle& t);

// Scalar of a (1,1)-tangle word: x with evaluate_F = x Id.
Series bracket(const RibbonDatum& rd, const ColorAssignment& colors,
               const SlicedTangle& t);

// As bracket, but double points evaluate through the over-minus-under tile,
// so the result is the signed sum over all resolutions in one pass.
Series singular_bracket(const RibbonDatum& rd, const ColorAssignment& colors,
                        const SlicedTangle& t);

// Closed 0-framed unknot colored a.
Series qdim(const RibbonDatum& rd, const Poly& a);

Series modified_dim(const RibbonDatum& rd, const Poly& a);
RatFunc d_zero(const RibbonDatum& rd, const Poly& a);

// F' of a cut word that already realizes the framing:
// modified_dim(color of the open component) * bracket.
InvariantSeries F_prime_word(const RibbonDatum& rd,
                             const ColorAssignment& colors,
                             const SlicedTangle& cut_word,
                             const std::string& link_name);

// F'(L) cut at component i (and its Q' aliases) live here once PD links are
// in play; declared in this header, implemented with the tangle front-end.
InvariantSeries F_prime(const RibbonDatum& rd, const ColorAssignment& colors,
                        const PDLink& link, int cut_comp);
InvariantSeries Q_prime(const RibbonDatum& rd, const ColorAssignment& colors,
                        const PDLink& link, int cut_comp);
Series what_Q(const RibbonDatum& rd, const ColorAssignment& colors,
              const SlicedTangle& t);

// Axiom checks on a loaded datum: R R^{-1} = Id, Yang-Baxter braid words,
// zig-zag duality, curl = twist, framed R1 pair, semiclassical h^1 match
// against the classical Casimir data of the same algebra, and the modified
// dimension window. Empty report means every axiom holds at the current
// truncation order.
ValidationReport validate_ribbon(const RibbonDatum& rd);

}  // namespace relink
