#pragma once

#include <map>
#include <string>
#include <vector>

#include "relink/slice.hpp"

namespace relink {

// One planar-diagram vertex. Edge labels counterclockwise starting from the
// incoming strand of the first (under, for regular crossings) branch; dir is
// the direction of the second (over) branch: +1 means it runs e[3] -> e[1]
// (a positive crossing when regular), -1 means e[1] -> e[3], 0 means infer
// from the labels.
struct PDCross {
  int e[4] = {0, 0, 0, 0};
  bool singular = false;
  int dir = 0;
};

// Parsed link diagram. Components are the orientation cycles of the edge
// successor map plus the explicit zero-crossing circles, numbered from 1 in
// order of their smallest edge label.
class PDLink {
 public:
  std::string name;
  std::vector<PDCross> crossings;
  std::vector<int> circles;

  static PDLink parse(const std::string& text, const std::string& where = "pd");
  static PDLink load(const std::string& path);
  static PDLink bundled(const std::string& id);
  std::string to_string() const;

  int component_count() const { return static_cast<int>(comps_.size()); }
  const std::vector<int>& component_edges(int i) const;
  int component_of(int edge) const;
  int successor(int edge) const;
  int framing(int i) const;
  const std::string& color_label(int i) const;  // empty if undeclared
  bool framings_even() const;

  int crossing_sign(int k) const;  // +1 / -1, 0 for singular
  int double_points() const;
  int self_writhe(int i) const;  // regular self-crossings only

  void set_framing(int i, int f);
  void set_color(int i, const std::string& label);

  // Germ ids: 4*k+slot for crossing k; circles get a synthetic pair.
  int germ_edge(int g) const;
  int germ_other(int g) const;      // the other germ of the same edge
  bool germ_incoming(int g) const;  // edge points into its vertex here

 private:
  std::map<int, int> framing_;
  std::map<int, std::string> color_;
  std::vector<std::vector<int>> comps_;
  std::map<int, int> comp_of_;
  std::map<int, int> succ_;
  std::map<int, std::pair<int, int>> germs_of_edge_;

  void finalize(const std::string& where, int declared_components);
  friend PDLink parse_pd(const std::string&);
};

PDLink parse_pd(const std::string& text);

enum class SliceStrategy { Lex, Reverse };

// Morse word for the closed link, framing realized as explicit curls.
SlicedTangle slice(const PDLink& link, SliceStrategy st = SliceStrategy::Lex);

// (1,1)-tangle word whose open strand is component i, both boundary points
// directed down; other components closed; curls realize every framing.
SlicedTangle cut(const PDLink& link, int i, SliceStrategy st = SliceStrategy::Lex);

// Word plus the metadata the Vassiliev side needs.
SingularLink as_singular(const PDLink& link, int cut_comp = 0,
                         SliceStrategy st = SliceStrategy::Lex);

struct FormalTangleSum {
  std::vector<std::pair<int, SlicedTangle>> terms;
};

// All 2^m crossing resolutions of the double points, over-crossing minus
// under-crossing; the last double point in word order varies fastest.
FormalTangleSum resolve_singularities(const SlicedTangle& t);
FormalTangleSum resolve_singularities(const SingularLink& t);

// ids of the .link files shipped under data/corpus, in evaluation order
const std::vector<std::string>& corpus_ids();

struct MovePair {
  std::string tag;  // r1pair, r2, r3, slide, framing
  SlicedTangle lhs;
  SlicedTangle rhs;
  int framing_shift = 0;  // rhs minus lhs curl count, framing pairs only
};

// Deterministic corpora for the invariance suites.
std::vector<SlicedTangle> double_unknot_framing_corpus();
std::vector<MovePair> move_equivalence_corpus();

}  // namespace relink
