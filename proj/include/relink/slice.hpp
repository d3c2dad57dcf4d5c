#pragma once

#include <set>
#include <string>
#include <vector>

#include "relink/error.hpp"

namespace relink {

// Boundary point of a sliced tangle. eps = +1 means the strand is directed
// downward at that point, -1 upward. comp is the link component carrying it.
struct BPoint {
  int eps = 1;
  int comp = 1;
  bool operator==(const BPoint&) const = default;
};

using BObject = std::vector<BPoint>;

std::string bobject_to_string(const BObject& o);

enum class SliceKind {
  XPos,   // positive crossing on strands (pos, pos+1)
  XNeg,   // negative crossing
  XSing,  // double point (resolves to XPos - XNeg)
  Cup,    // local minimum creating strands at (pos, pos+1)
  Cap,    // local maximum consuming strands at (pos, pos+1)
  Flip,   // symmetric-category swap (classical words only)
  Chord,  // Casimir two-tensor insertion on (pos, pos+1) (classical words only)
};

// One elementary piece per slice; all other strands continue as identities.
// Cup rightward creates (+,-), leftward creates (-,+).
// Cap rightward consumes (-,+), leftward consumes (+,-).
struct Slice {
  SliceKind kind;
  int pos = 0;
  bool rightward = true;  // Cup/Cap only
  int comp = 1;           // Cup only: component of the created strands

  static Slice xpos(int pos) { return {SliceKind::XPos, pos, true, 0}; }
  static Slice xneg(int pos) { return {SliceKind::XNeg, pos, true, 0}; }
  static Slice xsing(int pos) { return {SliceKind::XSing, pos, true, 0}; }
  static Slice cup(int pos, int comp, bool rightward) {
    return {SliceKind::Cup, pos, rightward, comp};
  }
  static Slice cap(int pos, bool rightward) {
    return {SliceKind::Cap, pos, rightward, 0};
  }
  static Slice flip(int pos) { return {SliceKind::Flip, pos, true, 0}; }
  static Slice chord(int pos) { return {SliceKind::Chord, pos, true, 0}; }
};

struct SlicedTangle {
  BObject bottom;
  std::vector<Slice> slices;

  // Boundary objects between slices: levels()[k] is the object below slice k,
  // levels().back() is the top. Throws validation_error on ill-typed words.
  std::vector<BObject> levels() const;
  BObject top() const { return levels().back(); }
  void validate() const { (void)levels(); }

  int singular_count() const;
  std::set<int> components() const;
  bool is_closed() const { return bottom.empty() && top().empty(); }
  bool is_one_one() const;
};

// Applies one slice to an object; shared by levels() and incremental builders.
BObject apply_slice(const BObject& below, const Slice& s);

// Writhe-(+1) and writhe-(-1) kinks on the downward strand at position pos.
// Emitted as three slices: cup, crossing, cap.
std::vector<Slice> pos_curl(int pos, int comp);
std::vector<Slice> neg_curl(int pos, int comp);

// A singular link in sliced form together with the declared framings the word
// already realizes (framing compensation happens at construction time).
struct SingularLink {
  SlicedTangle word;
  std::vector<int> components;  // component ids in order
  std::vector<int> framing;     // parallel to components

  int double_points() const { return word.singular_count(); }
  bool framings_even() const;
};

}  // namespace relink
