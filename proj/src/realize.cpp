#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "relink/chords.hpp"
#include "relink/error.hpp"

namespace relink {

// Builds the word top-down as a caterpillar: one component drawn at a time
// with its spine pinned at position 0. A chord's first visit hangs a narrow
// loop (riser + descender, owned by the second-visit component) next to the
// spine and crosses spine/riser once regularly and once singularly; the
// second visit routes the riser back to the spine, closes it with a cup, and
// the descender takes over as spine. Routing crossings are regular and free,
// so any chord diagram is realizable without planarity obstructions.

namespace {

enum class Role { Spine, Riser, Desc, Ret, Parked };

struct Strand {
  int eps;
  int comp;
  Role role;
  int chord;  // Riser/Desc only
};

struct Builder {
  std::vector<Strand> state;
  std::vector<Slice> topdown;  // first element = topmost slice
  SliceKind routing;

  int find(Role role, int chord) const {
    for (size_t i = 0; i < state.size(); ++i)
      if (state[i].role == role && (role == Role::Ret || state[i].chord == chord))
        return static_cast<int>(i);
    throw internal_error("caterpillar lost a pending strand");
  }

  void cross(SliceKind kind, int p) {
    topdown.push_back({kind, p, true, 0});
    std::swap(state[p], state[p + 1]);
  }

  // Word cap emitted top-down: starts two hanging strands at (p, p+1).
  void start_pair(int p, const Strand& left, const Strand& right) {
    bool rightward = left.eps < 0;
    topdown.push_back(Slice::cap(p, rightward));
    state.insert(state.begin() + p, {left, right});
  }

  // Word cup emitted top-down: joins the (+,-) pair at (p, p+1).
  void end_pair(int p) {
    if (state[p].eps <= 0 || state[p + 1].eps >= 0 ||
        state[p].comp != state[p + 1].comp)
      throw internal_error("caterpillar cup on a mismatched pair");
    topdown.push_back(Slice::cup(p, state[p].comp, true));
    state.erase(state.begin() + p, state.begin() + p + 2);
  }

  void route_left(int from, int to) {
    for (int v = from - 1; v >= to; --v) cross(routing, v);
  }
};

// Inserts slices mapping a level object to itself at the first level whose
// object shows a downward germ of comp; returns false if none exists.
bool insert_at_downward_germ(SlicedTangle& w, int comp,
                             const std::function<std::vector<Slice>(int)>& make) {
  std::vector<BObject> levs = w.levels();
  for (size_t l = 0; l < levs.size(); ++l)
    for (size_t p = 0; p < levs[l].size(); ++p)
      if (levs[l][p].eps > 0 && levs[l][p].comp == comp) {
        std::vector<Slice> add = make(static_cast<int>(p));
        w.slices.insert(w.slices.begin() + l, add.begin(), add.end());
        return true;
      }
  return false;
}

std::map<int, int> self_writhes(const SlicedTangle& w) {
  std::vector<BObject> levs = w.levels();
  std::map<int, int> wr;
  for (size_t k = 0; k < w.slices.size(); ++k) {
    const Slice& s = w.slices[k];
    if (s.kind != SliceKind::XPos && s.kind != SliceKind::XNeg) continue;
    if (levs[k][s.pos].comp != levs[k][s.pos + 1].comp) continue;
    wr[levs[k][s.pos].comp] += s.kind == SliceKind::XPos ? 1 : -1;
  }
  return wr;
}

}  // namespace

SingularLink make_singular_representative(const ChordDiagram& d, int variant) {
  d.validate();
  if (d.skeleton.interval_count() > 1)
    throw config_error(
        "make_singular_representative wants a closed or (1,1) skeleton");
  if (variant < 0)
    throw config_error("make_singular_representative: negative variant");

  const int n = d.skeleton.size();
  std::map<int, int> partner;
  std::map<int, int> chord_of;
  std::map<int, int> comp_of;
  for (size_t c = 0; c < d.chords.size(); ++c) {
    partner[d.chords[c].first] = d.chords[c].second;
    partner[d.chords[c].second] = d.chords[c].first;
    chord_of[d.chords[c].first] = chord_of[d.chords[c].second] = static_cast<int>(c);
  }
  for (int i = 0; i < n; ++i)
    for (int p : d.points[i]) comp_of[p] = i + 1;

  std::vector<int> order;  // processing order, interval first
  for (int i = 0; i < n; ++i)
    if (d.skeleton.comps[i] == CompKind::Interval) order.push_back(i);
  for (int i = 0; i < n; ++i)
    if (d.skeleton.comps[i] == CompKind::Circle) order.push_back(i);

  Builder b;
  b.routing = variant % 2 ? SliceKind::XNeg : SliceKind::XPos;
  std::map<int, bool> placed;

  for (int idx : order) {
    const int comp = idx + 1;
    const bool circle = d.skeleton.comps[idx] == CompKind::Circle;
    if (circle) {
      b.start_pair(0, {1, comp, Role::Spine, -1}, {-1, comp, Role::Ret, -1});
    } else {
      b.state.insert(b.state.begin(), Strand{1, comp, Role::Spine, -1});
    }
    for (int q : d.points[idx]) {
      const int c = chord_of[q];
      if (!placed.count(partner[q])) {
        const int j = comp_of[partner[q]];
        b.start_pair(1, {-1, j, Role::Riser, c}, {1, j, Role::Desc, c});
        b.cross(b.routing, 0);
        b.cross(SliceKind::XSing, 0);
        placed[q] = true;
      } else {
        b.route_left(b.find(Role::Riser, c), 1);
        b.end_pair(0);
        b.route_left(b.find(Role::Desc, c), 0);
        b.state[0].role = Role::Spine;
        b.state[0].chord = -1;
      }
    }
    if (circle) {
      b.route_left(b.find(Role::Ret, -1), 1);
      b.end_pair(0);
    } else {
      b.state[0].role = Role::Parked;
    }
  }

  SingularLink out;
  for (const Strand& s : b.state)
    out.word.bottom.push_back({s.eps, s.comp});
  out.word.slices.assign(b.topdown.rbegin(), b.topdown.rend());
  out.word.validate();
  for (int i = 1; i <= n; ++i) {
    out.components.push_back(i);
    out.framing.push_back(0);
  }

  if (n > 0) {
    const int c1 = order[0] + 1;
    for (int k = 0; k < variant; ++k)
      insert_at_downward_germ(out.word, c1, [&](int p) {
        std::vector<Slice> pair = pos_curl(p, c1);
        std::vector<Slice> neg = neg_curl(p, c1);
        pair.insert(pair.end(), neg.begin(), neg.end());
        return pair;
      });
  }
  for (auto [comp, wr] : self_writhes(out.word)) {
    for (int k = 0; k < std::abs(wr); ++k)
      if (!insert_at_downward_germ(out.word, comp, [&](int p) {
            return wr > 0 ? neg_curl(p, comp) : pos_curl(p, comp);
          }))
        throw internal_error("no downward germ to carry a framing curl");
  }
  out.word.validate();
  return out;
}

}  // namespace relink
