#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relink/poly.hpp"
#include "relink/slice.hpp"

namespace relink {

enum class CompKind { Circle, Interval };

// Tangle skeleton: ordered components, each an oriented circle or interval.
struct Skeleton {
  std::vector<CompKind> comps;

  static Skeleton circle() { return {{CompKind::Circle}}; }
  static Skeleton circles(int n);
  static Skeleton one_one() { return {{CompKind::Interval}}; }

  int size() const { return static_cast<int>(comps.size()); }
  bool closed() const;
  int interval_count() const;
  bool operator==(const Skeleton&) const = default;
};

// Chord diagram: per component the endpoint labels in reading order (cyclic
// for circles, linear for intervals) and the chords as unordered label pairs.
// Only the combinatorial order matters; equality is by canonical code, which
// minimizes over independent rotations of each circle. Components are never
// permuted and orientation is never reversed.
struct ChordDiagram {
  Skeleton skeleton;
  std::vector<std::vector<int>> points;      // parallel to skeleton.comps
  std::vector<std::pair<int, int>> chords;
  std::string name;

  int degree() const { return static_cast<int>(chords.size()); }
  void validate() const;

  // [ncomp, kinds..., counts..., partner positions in reading order...],
  // minimized lexicographically over circle rotations.
  std::vector<int> code() const;
  ChordDiagram canonical() const;

  std::string to_string() const;
  static ChordDiagram parse(const std::string& text,
                            const std::string& where = "<text>");
  static ChordDiagram load(const std::string& path);
  static ChordDiagram bundled(const std::string& id);
};

bool operator==(const ChordDiagram& a, const ChordDiagram& b);
bool operator!=(const ChordDiagram& a, const ChordDiagram& b);
bool operator<(const ChordDiagram& a, const ChordDiagram& b);

// Formal rational combination of diagrams on one skeleton; terms are merged
// by canonical form, kept sorted by code, zero coefficients dropped.
struct DiagramCombination {
  std::vector<std::pair<Rat, ChordDiagram>> terms;

  void add(const Rat& c, const ChordDiagram& d);
  bool empty() const { return terms.empty(); }
  std::string to_string() const;
};

// All diagrams of degree m on s, duplicate free, sorted by canonical code.
std::vector<ChordDiagram> enumerate_diagrams(const Skeleton& s, int m);

// 4T relators of degree m: for every diagram and every chord end e directly
// following an end f of a different chord, the neighboring-end slide
//   +[e before f] - [e after f] + [e before f2] - [e after f2]
// with f2 the partner of f. Deduplicated up to overall sign, sorted.
std::vector<DiagramCombination> four_term_combinations(const Skeleton& s, int m);

// Opens circle comp (1-based) into an interval, reading from the gap after
// the gap-th endpoint (gap in [0, k) for k endpoints, 0 for an empty circle).
ChordDiagram cut_diagram(const ChordDiagram& d, int comp, int gap = 0);

// Skeleton and chords of a sliced singular link: one component per link
// component (interval for the open one), one chord per double point joining
// the two strands through it.
ChordDiagram underlying_diagram(const SingularLink& t);

// A singular link whose underlying diagram is d, all framings zero. Distinct
// variant values give move-inequivalent words for the same diagram.
SingularLink make_singular_representative(const ChordDiagram& d, int variant = 0);

}  // namespace relink
