#include "relink/slice.hpp"

#include <sstream>

namespace relink {

std::string bobject_to_string(const BObject& o) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < o.size(); ++i) {
    if (i) out << " ";
    out << (o[i].eps > 0 ? "+" : "-") << o[i].comp;
  }
  out << ")";
  return out.str();
}

static void need(bool ok, const std::string& what, const BObject& below) {
  if (!ok)
    throw validation_error("ill-typed slice: " + what + " below " +
                           bobject_to_string(below));
}

BObject apply_slice(const BObject& below, const Slice& s) {
  const int n = static_cast<int>(below.size());
  BObject out = below;
  switch (s.kind) {
    case SliceKind::XPos:
    case SliceKind::XNeg:
    case SliceKind::XSing:
    case SliceKind::Flip:
      need(s.pos >= 0 && s.pos + 1 < n, "crossing needs two strands", below);
      std::swap(out[s.pos], out[s.pos + 1]);
      return out;
    case SliceKind::Chord:
      need(s.pos >= 0 && s.pos + 1 < n, "chord needs two strands", below);
      need(below[s.pos].eps > 0 && below[s.pos + 1].eps > 0,
           "chord insertion expects downward strands", below);
      return out;
    case SliceKind::Cup: {
      need(s.pos >= 0 && s.pos <= n, "cup position out of range", below);
      BPoint left{s.rightward ? 1 : -1, s.comp};
      BPoint right{s.rightward ? -1 : 1, s.comp};
      out.insert(out.begin() + s.pos, {left, right});
      return out;
    }
    case SliceKind::Cap: {
      need(s.pos >= 0 && s.pos + 1 < n, "cap needs two strands", below);
      const BPoint& a = below[s.pos];
      const BPoint& b = below[s.pos + 1];
      need(a.comp == b.comp, "cap joining different components", below);
      if (s.rightward)
        need(a.eps < 0 && b.eps > 0, "rightward cap expects (-,+)", below);
      else
        need(a.eps > 0 && b.eps < 0, "leftward cap expects (+,-)", below);
      out.erase(out.begin() + s.pos, out.begin() + s.pos + 2);
      return out;
    }
  }
  throw internal_error("unhandled slice kind");
}

std::vector<BObject> SlicedTangle::levels() const {
  std::vector<BObject> v;
  v.reserve(slices.size() + 1);
  v.push_back(bottom);
  for (const Slice& s : slices) v.push_back(apply_slice(v.back(), s));
  return v;
}

int SlicedTangle::singular_count() const {
  int m = 0;
  for (const Slice& s : slices)
    if (s.kind == SliceKind::XSing) ++m;
  return m;
}

std::set<int> SlicedTangle::components() const {
  std::set<int> cs;
  for (const BPoint& p : bottom) cs.insert(p.comp);
  for (const Slice& s : slices)
    if (s.kind == SliceKind::Cup) cs.insert(s.comp);
  return cs;
}

bool SlicedTangle::is_one_one() const {
  BObject t = top();
  return bottom.size() == 1 && t.size() == 1 && bottom[0].eps > 0 &&
         t[0].eps > 0 && bottom[0].comp == t[0].comp;
}

std::vector<Slice> pos_curl(int pos, int comp) {
  return {Slice::cup(pos + 1, comp, true), Slice::xpos(pos),
          Slice::cap(pos + 1, false)};
}

std::vector<Slice> neg_curl(int pos, int comp) {
  return {Slice::cup(pos + 1, comp, true), Slice::xneg(pos),
          Slice::cap(pos + 1, false)};
}

bool SingularLink::framings_even() const {
  for (int f : framing)
    if (f % 2 != 0) return false;
  return true;
}

}  // namespace relink
