#include "relink/pd.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "relink/error.hpp"
#include "textio.hpp"

namespace relink {

namespace {

struct Token {
  std::string head;  // X, Xp, Xm, SING, SINGb, SINGd, O
  std::vector<int> args;
};

Token parse_token(const std::string& word, LineReader& r) {
  auto lb = word.find('[');
  if (lb == std::string::npos || word.back() != ']')
    r.fail("expected TOKEN[args], got '" + word + "'");
  Token t;
  t.head = word.substr(0, lb);
  for (const std::string& part :
       split_on(word.substr(lb + 1, word.size() - lb - 2), ',')) {
    try {
      t.args.push_back(std::stoi(strip(part)));
    } catch (...) {
      r.fail("bad edge label in '" + word + "'");
    }
  }
  return t;
}

}  // namespace

PDLink PDLink::parse(const std::string& text, const std::string& where) {
  LineReader r = LineReader::from_text(text, where);
  PDLink L;
  int declared_components = -1;
  std::string line;
  while (r.next(line)) {
    std::vector<std::string> words = split_ws(line);
    if (words.empty()) continue;
    const std::string& key = words[0];
    auto as_int = [&](const std::string& w) {
      try {
        return std::stoi(w);
      } catch (...) {
        r.fail("expected an integer, got '" + w + "'");
      }
    };
    if (key == "link") {
      if (words.size() != 2) r.fail("link wants one name");
      L.name = words[1];
    } else if (key == "components") {
      if (words.size() != 2) r.fail("components wants one count");
      declared_components = as_int(words[1]);
    } else if (key == "framing") {
      for (size_t i = 1; i < words.size(); ++i)
        L.framing_[static_cast<int>(i)] = as_int(words[i]);
    } else if (key == "color") {
      if (words.size() != 3) r.fail("color wants: color <component> <label>");
      L.color_[as_int(words[1])] = words[2];
    } else {
      for (const std::string& w : words) {
        Token t = parse_token(w, r);
        if (t.head == "O") {
          if (t.args.size() != 1) r.fail("O wants one edge label");
          L.circles.push_back(t.args[0]);
          continue;
        }
        if (t.args.size() != 4) r.fail(t.head + " wants four edge labels");
        PDCross c;
        for (int i = 0; i < 4; ++i) c.e[i] = t.args[i];
        if (t.head == "X") {
        } else if (t.head == "Xp") {
          c.dir = 1;
        } else if (t.head == "Xm") {
          c.dir = -1;
        } else if (t.head == "SING") {
          c.singular = true;
        } else if (t.head == "SINGd") {
          c.singular = true;
          c.dir = 1;
        } else if (t.head == "SINGb") {
          c.singular = true;
          c.dir = -1;
        } else {
          r.fail("unknown token '" + t.head + "'");
        }
        L.crossings.push_back(c);
      }
    }
  }
  L.finalize(where, declared_components);
  return L;
}

PDLink PDLink::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw config_error("cannot open " + path);
  std::ostringstream text;
  text << f.rdbuf();
  return parse(text.str(), path);
}

PDLink PDLink::bundled(const std::string& id) {
  return load(std::string(RELINK_DATA_DIR) + "/corpus/" + id + ".link");
}

void PDLink::finalize(const std::string& where, int declared_components) {
  auto bad = [&](const std::string& msg) { throw parse_error(where + ": " + msg); };

  // occurrences: edge -> list of germ ids (4*crossing + slot)
  std::map<int, std::vector<int>> occ;
  for (size_t k = 0; k < crossings.size(); ++k)
    for (int s = 0; s < 4; ++s) occ[crossings[k].e[s]].push_back(4 * static_cast<int>(k) + s);
  for (int e : circles) {
    if (occ.count(e) || std::count(circles.begin(), circles.end(), e) > 1)
      bad("circle edge " + std::to_string(e) + " reused");
    occ[e] = {};
  }
  for (auto& [e, gs] : occ)
    if (!gs.empty() && gs.size() != 2)
      bad("edge " + std::to_string(e) + " appears " + std::to_string(gs.size()) +
          " times (want 2)");

  // Germ typing: +1 incoming (edge points into the vertex), -1 outgoing.
  std::vector<int> io(4 * crossings.size(), 0);
  std::vector<int> dir(crossings.size(), 0);
  auto set_dir = [&](size_t k, int d) {
    dir[k] = d;
    io[4 * k + 1] = (d > 0) ? -1 : 1;
    io[4 * k + 3] = (d > 0) ? 1 : -1;
  };
  for (size_t k = 0; k < crossings.size(); ++k) {
    io[4 * k + 0] = 1;
    io[4 * k + 2] = -1;
    if (crossings[k].dir != 0) set_dir(k, crossings[k].dir);
  }
  // Propagate: the two germs of an edge have opposite io; the two over
  // slots of a crossing have opposite io.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [e, gs] : occ) {
      if (gs.size() != 2) continue;
      for (int side = 0; side < 2; ++side) {
        int g = gs[side], o = gs[1 - side];
        if (io[g] != 0 && io[o] == 0) {
          io[o] = -io[g];
          changed = true;
        }
      }
    }
    for (size_t k = 0; k < crossings.size(); ++k) {
      if (dir[k] != 0) continue;
      if (io[4 * k + 1] != 0) {
        set_dir(k, io[4 * k + 1] < 0 ? 1 : -1);
        changed = true;
      } else if (io[4 * k + 3] != 0) {
        set_dir(k, io[4 * k + 3] > 0 ? 1 : -1);
        changed = true;
      }
    }
  }
  // Leftovers: components running only through unresolved over strands.
  // Successive labels along a strand differ by one, wrapping at the ends.
  for (size_t k = 0; k < crossings.size(); ++k) {
    if (dir[k] != 0) {
      continue;
    }
    int b = crossings[k].e[1], d = crossings[k].e[3];
    int chosen;
    if (d == b + 1) chosen = -1;
    else if (b == d + 1) chosen = 1;
    else chosen = (d < b) ? -1 : 1;
    set_dir(k, chosen);
    for (bool again = true; again;) {
      again = false;
      for (auto& [e, gs] : occ)
        if (gs.size() == 2)
          for (int side = 0; side < 2; ++side)
            if (io[gs[side]] != 0 && io[gs[1 - side]] == 0) {
              io[gs[1 - side]] = -io[gs[side]];
              again = true;
            }
      for (size_t j = 0; j < crossings.size(); ++j)
        if (dir[j] == 0 && io[4 * j + 1] != 0) {
          set_dir(j, io[4 * j + 1] < 0 ? 1 : -1);
          again = true;
        }
    }
  }
  for (auto& [e, gs] : occ)
    if (gs.size() == 2 && io[gs[0]] + io[gs[1]] != 0)
      bad("orientation inconsistency at edge " + std::to_string(e));
  for (size_t k = 0; k < crossings.size(); ++k) crossings[k].dir = dir[k];

  // Successors and components.
  for (size_t k = 0; k < crossings.size(); ++k) {
    const PDCross& c = crossings[k];
    succ_[c.e[0]] = c.e[2];
    if (c.dir > 0) succ_[c.e[3]] = c.e[1];
    else succ_[c.e[1]] = c.e[3];
  }
  for (auto& [e, gs] : occ) {
    if (gs.empty()) {
      germs_of_edge_[e] = {-10, -10};
    } else {
      int gi = (io[gs[0]] > 0) ? gs[0] : gs[1];
      int go = (io[gs[0]] > 0) ? gs[1] : gs[0];
      germs_of_edge_[e] = {go, gi};  // (tail, head)
    }
  }
  std::set<int> seen;
  for (auto& [e, gs] : occ) {
    if (seen.count(e)) continue;
    std::vector<int> cyc;
    if (gs.empty()) {
      cyc = {e};
      seen.insert(e);
    } else {
      int cur = e;
      do {
        if (!succ_.count(cur)) bad("open strand at edge " + std::to_string(cur));
        cyc.push_back(cur);
        seen.insert(cur);
        cur = succ_[cur];
      } while (cur != e && !seen.count(cur));
      if (cur != e) bad("strand from edge " + std::to_string(e) + " never closes");
    }
    comps_.push_back(cyc);
  }
  std::sort(comps_.begin(), comps_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return *std::min_element(a.begin(), a.end()) <
                     *std::min_element(b.begin(), b.end());
            });
  for (size_t i = 0; i < comps_.size(); ++i)
    for (int e : comps_[i]) comp_of_[e] = static_cast<int>(i) + 1;

  if (declared_components >= 0 && declared_components != component_count())
    bad("declares " + std::to_string(declared_components) + " components, found " +
        std::to_string(component_count()));
  for (auto& [i, f] : framing_)
    if (i < 1 || i > component_count())
      bad("framing for missing component " + std::to_string(i));
  for (auto& [i, lab] : color_)
    if (i < 1 || i > component_count())
      bad("color for missing component " + std::to_string(i));
}

std::string PDLink::to_string() const {
  std::ostringstream out;
  if (!name.empty()) out << "link " << name << "\n";
  out << "components " << component_count() << "\n";
  if (!framing_.empty()) {
    out << "framing";
    for (int i = 1; i <= component_count(); ++i) out << " " << framing(i);
    out << "\n";
  }
  for (auto& [i, lab] : color_) out << "color " << i << " " << lab << "\n";
  for (const PDCross& c : crossings) {
    if (c.singular) out << (c.dir > 0 ? "SINGd" : "SINGb");
    else out << (c.dir > 0 ? "Xp" : "Xm");
    out << "[" << c.e[0] << "," << c.e[1] << "," << c.e[2] << "," << c.e[3] << "]\n";
  }
  for (int e : circles) out << "O[" << e << "]\n";
  return out.str();
}

const std::vector<int>& PDLink::component_edges(int i) const {
  if (i < 1 || i > component_count())
    throw validation_error("no component " + std::to_string(i));
  return comps_[i - 1];
}

int PDLink::component_of(int edge) const {
  auto it = comp_of_.find(edge);
  if (it == comp_of_.end())
    throw validation_error("no edge " + std::to_string(edge));
  return it->second;
}

int PDLink::successor(int edge) const {
  auto it = succ_.find(edge);
  return it == succ_.end() ? edge : it->second;
}

int PDLink::framing(int i) const {
  auto it = framing_.find(i);
  return it == framing_.end() ? 0 : it->second;
}

const std::string& PDLink::color_label(int i) const {
  static const std::string none;
  auto it = color_.find(i);
  return it == color_.end() ? none : it->second;
}

bool PDLink::framings_even() const {
  for (int i = 1; i <= component_count(); ++i)
    if (framing(i) % 2 != 0) return false;
  return true;
}

int PDLink::crossing_sign(int k) const {
  return crossings[k].singular ? 0 : crossings[k].dir;
}

int PDLink::double_points() const {
  int n = 0;
  for (const PDCross& c : crossings) n += c.singular;
  return n;
}

int PDLink::self_writhe(int i) const {
  int w = 0;
  for (size_t k = 0; k < crossings.size(); ++k)
    if (!crossings[k].singular && component_of(crossings[k].e[0]) == i &&
        component_of(crossings[k].e[1]) == i)
      w += crossings[k].dir;
  return w;
}

void PDLink::set_framing(int i, int f) {
  (void)component_edges(i);
  framing_[i] = f;
}

void PDLink::set_color(int i, const std::string& label) {
  (void)component_edges(i);
  color_[i] = label;
}

int PDLink::germ_edge(int g) const { return crossings[g / 4].e[g % 4]; }

int PDLink::germ_other(int g) const {
  auto& [t, h] = germs_of_edge_.at(germ_edge(g));
  return g == t ? h : t;
}

bool PDLink::germ_incoming(int g) const {
  return germs_of_edge_.at(germ_edge(g)).second == g;
}

PDLink parse_pd(const std::string& text) { return PDLink::parse(text); }

// ---------------------------------------------------------------------------
// Morse slicing: depth-first search over local moves (cap, fire a vertex,
// cup an untouched edge), with enough bookkeeping to reject words that draw
// phantom circles. Loose ends target germs; an end is +1 (downward) exactly
// when its target is a tail germ.

namespace {

constexpr int kTopTok = -1;
constexpr int kBottomTok = -2;

struct End {
  int edge;
  int target;  // germ id, circle germ id, or token
  int cls;     // connectivity class for closure counting
};

struct Planner {
  const PDLink& L;
  SliceStrategy st;
  int cut_comp;
  int cut_edge = 0;
  int ncross, ncirc;
  int circle_base;  // circle j owns germs circle_base+2j, +2j+1

  std::vector<int> circle_of_edge;  // index into L.circles or -1

  Planner(const PDLink& l, SliceStrategy s, int cc)
      : L(l), st(s), cut_comp(cc) {
    ncross = static_cast<int>(L.crossings.size());
    ncirc = static_cast<int>(L.circles.size());
    circle_base = 4 * ncross;
    if (cut_comp > 0) {
      const std::vector<int>& es = L.component_edges(cut_comp);
      cut_edge = *std::min_element(es.begin(), es.end());
    }
  }

  bool is_circle(int edge) const {
    return std::find(L.circles.begin(), L.circles.end(), edge) != L.circles.end();
  }
  int circle_index(int edge) const {
    return static_cast<int>(std::find(L.circles.begin(), L.circles.end(), edge) -
                            L.circles.begin());
  }

  int partner(int edge, int germ) const {
    // the other extremity of the piece of `edge` containing `germ`
    if (edge == cut_edge && cut_comp > 0) {
      if (germ == kBottomTok) return low_real_germ();
      if (germ == kTopTok) return high_real_germ();
      if (germ == low_real_germ()) return kBottomTok;
      return kTopTok;
    }
    if (germ >= circle_base) return germ ^ 1;
    return L.germ_other(germ);
  }

  int low_real_germ() const {  // tail germ of the cut edge
    auto [t, h] = real_germs(cut_edge);
    return t;
  }
  int high_real_germ() const {
    auto [t, h] = real_germs(cut_edge);
    return h;
  }
  std::pair<int, int> real_germs(int edge) const {
    int t = -10, h = -10;
    for (int g = 0; g < 4 * ncross; ++g) {
      if (L.germ_edge(g) != edge) continue;
      if (L.germ_incoming(g)) h = g;
      else t = g;
    }
    return {t, h};
  }

  int eps_of_target(int germ) const {
    if (germ == kTopTok) return 1;
    if (germ == kBottomTok) return -1;
    if (germ >= circle_base) return (germ - circle_base) % 2 == 0 ? 1 : -1;
    return L.germ_incoming(germ) ? -1 : 1;
  }

  struct State {
    std::vector<End> ends;
    std::vector<char> fired;        // per crossing
    std::vector<char> germ_drawn;   // crossing + circle germs
    std::vector<char> comp_closed;  // 1-based padded
    std::vector<Slice> word;
  };

  std::set<std::string> visited;

  std::string key(const State& s) const {
    std::ostringstream k;
    std::map<int, int> relabel;
    for (const End& e : s.ends) {
      auto it = relabel.try_emplace(e.cls, static_cast<int>(relabel.size())).first;
      k << e.edge << ":" << e.target << ":" << it->second << ";";
    }
    k << "|";
    for (char c : s.fired) k << int(c);
    for (char c : s.germ_drawn) k << int(c);
    for (char c : s.comp_closed) k << int(c);
    return k.str();
  }

  bool edge_touched(const State& s, int edge, bool high_piece) const {
    for (const End& e : s.ends) {
      if (e.edge != edge) continue;
      if (edge == cut_edge && cut_comp > 0) {
        bool h = (e.target == kTopTok || e.target == high_real_germ());
        if (h == high_piece) return true;
      } else {
        return true;
      }
    }
    auto touched_germ = [&](int g) {
      return g >= 0 && s.germ_drawn[static_cast<size_t>(g)];
    };
    if (edge == cut_edge && cut_comp > 0)
      return touched_germ(high_piece ? high_real_germ() : low_real_germ());
    if (is_circle(edge)) {
      int j = circle_index(edge);
      return touched_germ(circle_base + 2 * j);
    }
    auto [t, h] = real_germs(edge);
    return touched_germ(t) || touched_germ(h);
  }

  bool solve(State& s, int depth) {
    if (done(s)) return true;
    if (depth > 4 * (ncross + ncirc) + 16) return false;
    if (static_cast<int>(s.ends.size()) > 2 * ncross + 4) return false;
    std::string k = key(s);
    if (!visited.insert(k).second) return false;

    const int n = static_cast<int>(s.ends.size());
    std::vector<int> order(std::max(0, n - 1));
    for (int i = 0; i + 1 < n; ++i) order[i] = i;
    if (st == SliceStrategy::Reverse) std::reverse(order.begin(), order.end());

    // caps
    for (int p : order) {
      const End &a = s.ends[p], &b = s.ends[p + 1];
      if (a.edge != b.edge || a.target == b.target) continue;
      if (partner(a.edge, a.target) != b.target) continue;
      if (!germ_ok(s, a.target) || !germ_ok(s, b.target)) continue;
      int comp = L.component_of(a.edge);
      bool closure = (a.cls == b.cls);
      if (closure && (comp == cut_comp || s.comp_closed[comp])) continue;
      State next = s;
      if (closure) next.comp_closed[comp] = 1;
      else merge_cls(next, a.cls, b.cls);
      bool rightward = eps_of_target(a.target) < 0;  // (-,+) pattern
      next.word.push_back(Slice::cap(p, rightward));
      next.ends.erase(next.ends.begin() + p, next.ends.begin() + p + 2);
      if (solve(next, depth + 1)) {
        s = std::move(next);
        return true;
      }
    }

    // fires
    for (int p : order) {
      if (!fire_ok(s, p)) continue;
      State next = s;
      do_fire(next, p);
      if (solve(next, depth + 1)) {
        s = std::move(next);
        return true;
      }
    }

    // Minima are only ever emitted fused with the slice that first uses one
    // of the two new strands: any Morse word rearranges into that shape by
    // sliding each cup up to its first use. Three fused shapes cover all
    // cases: cup beside a live end and fire, two cups and fire (no live end
    // at that crossing yet), and cup plus cap for a split circle.

    // cup+fire beside a live end
    std::vector<int> qs(n);
    for (int i = 0; i < n; ++i) qs[i] = i;
    if (st == SliceStrategy::Reverse) std::reverse(qs.begin(), qs.end());
    for (int q : qs) {
      const End& x = s.ends[q];
      if (x.target < 0 || x.target >= circle_base) continue;
      int kx = x.target / 4;
      if (s.fired[kx]) continue;
      int sx = x.target % 4;
      for (int side = 0; side < 2; ++side) {
        bool x_left = (st == SliceStrategy::Reverse) ? side == 1 : side == 0;
        int gneed = x_left ? 4 * kx + (sx + 1) % 4 : 4 * kx + (sx + 3) % 4;
        int e2 = L.germ_edge(gneed);
        bool high;
        if (!cup_ok(s, e2, gneed, high)) continue;
        State next = s;
        if (x_left) {
          make_cup(next, e2, high, q + 1, gneed, true);
          do_fire(next, q);
        } else {
          make_cup(next, e2, high, q, gneed, false);
          do_fire(next, q + 1);
        }
        if (solve(next, depth + 2)) {
          s = std::move(next);
          return true;
        }
      }
    }

    // split circles, drawn whole at the frontier edge
    for (int j = 0; j < ncirc; ++j) {
      int e = L.circles[j];
      if (s.germ_drawn[circle_base + 2 * j]) continue;
      if (cut_comp > 0 && e == cut_edge) continue;
      int comp = L.component_of(e);
      if (s.comp_closed[comp]) continue;
      State next = s;
      int p = (st == SliceStrategy::Reverse) ? n : 0;
      bool rightward = st != SliceStrategy::Reverse;
      make_cup(next, e, false, p, circle_base + 2 * j, rightward);
      next.comp_closed[comp] = 1;
      next.word.push_back(Slice::cap(p, !rightward));
      next.ends.erase(next.ends.begin() + p, next.ends.begin() + p + 2);
      if (solve(next, depth + 2)) {
        s = std::move(next);
        return true;
      }
    }

    // double cup + fire on a crossing with no live ends yet
    std::vector<int> ks(ncross);
    for (int i = 0; i < ncross; ++i) ks[i] = i;
    if (st == SliceStrategy::Reverse) std::reverse(ks.begin(), ks.end());
    std::vector<int> positions(n + 1);
    for (int i = 0; i <= n; ++i) positions[i] = i;
    if (st == SliceStrategy::Reverse) std::reverse(positions.begin(), positions.end());
    for (int k1 : ks) {
      if (s.fired[k1]) continue;
      bool live = false;
      for (const End& e : s.ends)
        if (e.target >= 0 && e.target < circle_base && e.target / 4 == k1)
          live = true;
      if (live) continue;
      for (int m = 0; m < 4; ++m) {
        int g0 = 4 * k1 + m, g1 = 4 * k1 + (m + 1) % 4;
        int e0 = L.germ_edge(g0), e1 = L.germ_edge(g1);
        bool high0 = false, high1 = false;
        if (!cup_ok(s, e0, g0, high0)) continue;
        if (e0 != e1 && !cup_ok(s, e1, g1, high1)) continue;
        for (int p : positions) {
          State next = s;
          if (e0 == e1) {
            make_cup(next, e0, high0, p, g0, true);
            do_fire(next, p);
          } else {
            make_cup(next, e1, high1, p, g1, true);
            make_cup(next, e0, high0, p, g0, false);
            do_fire(next, p + 1);
          }
          if (solve(next, depth + 3)) {
            s = std::move(next);
            return true;
          }
        }
      }
    }
    return false;
  }

  bool germ_ok(const State& s, int g) const {
    if (g == kTopTok) return false;  // the open top never caps
    if (g == kBottomTok) return true;
    return s.germ_drawn[static_cast<size_t>(g)];
  }

  int partner_from(int germ) const { return partner(L.germ_edge(germ), germ); }

  bool fire_ok(const State& s, int p) const {
    const End &a = s.ends[p], &b = s.ends[p + 1];
    if (a.target < 0 || b.target < 0) return false;
    if (a.target >= circle_base || b.target >= circle_base) return false;
    if (a.target / 4 != b.target / 4 || s.fired[a.target / 4]) return false;
    return b.target % 4 == (a.target % 4 + 1) % 4;
  }

  // Fires the crossing fed by the ends at (p, p+1). Bottom slot m continues
  // to top slot m+2, m+1 to m+3; tops are emitted left (m+3) then right
  // (m+2), each heading for the far germ of its edge.
  void do_fire(State& next, int p) const {
    int k1 = next.ends[p].target / 4;
    int m = next.ends[p].target % 4;
    next.fired[k1] = 1;
    for (int sl = 0; sl < 4; ++sl) next.germ_drawn[4 * k1 + sl] = 1;
    const PDCross& c = L.crossings[k1];
    next.word.push_back(c.singular
                            ? Slice::xsing(p)
                            : (c.dir > 0 ? Slice::xpos(p) : Slice::xneg(p)));
    int gl = 4 * k1 + (m + 3) % 4, gr = 4 * k1 + (m + 2) % 4;
    int cl = next.ends[p + 1].cls, cr = next.ends[p].cls;
    next.ends[p] = End{L.germ_edge(gl), partner_from(gl), cl};
    next.ends[p + 1] = End{L.germ_edge(gr), partner_from(gr), cr};
  }

  // Whether the piece of e holding germ `gneed` can still take its minimum.
  bool cup_ok(const State& s, int e, int gneed, bool& high) const {
    high = false;
    if (cut_comp > 0 && e == cut_edge) {
      if (gneed != high_real_germ()) return false;  // low piece starts drawn
      high = true;
      return !edge_touched(s, e, true);
    }
    return !edge_touched(s, e, false);
  }

  // Emits a cup on e at position p, oriented so the end targeting `germ`
  // comes out on the requested side.
  void make_cup(State& next, int e, bool high, int p, int germ,
                bool germ_on_left) const {
    int gt, gh;
    if (high) {
      gt = kTopTok;
      gh = high_real_germ();
    } else if (is_circle(e)) {
      int j = circle_index(e);
      gt = circle_base + 2 * j;
      gh = gt + 1;
      next.germ_drawn[gt] = next.germ_drawn[gh] = 1;
    } else {
      auto [t, h] = real_germs(e);
      gt = t;
      gh = h;
    }
    bool rightward = germ_on_left ? (germ == gt) : (germ == gh);
    int cls = fresh_cls(next);
    End plus{e, gt, cls}, minus{e, gh, cls};
    next.word.push_back(Slice::cup(p, L.component_of(e), rightward));
    if (rightward)
      next.ends.insert(next.ends.begin() + p, {plus, minus});
    else
      next.ends.insert(next.ends.begin() + p, {minus, plus});
  }

  void merge_cls(State& s, int a, int b) {
    for (End& e : s.ends)
      if (e.cls == b) e.cls = a;
  }
  int fresh_cls(const State& s) const {
    int m = 0;
    for (const End& e : s.ends) m = std::max(m, e.cls + 1);
    return m;
  }

  bool done(const State& s) const {
    for (char f : s.fired)
      if (!f) return false;
    for (int j = 0; j < ncirc; ++j)
      if (!s.germ_drawn[circle_base + 2 * j]) return false;
    for (int i = 1; i <= L.component_count(); ++i)
      if (i != cut_comp && !s.comp_closed[i]) return false;
    if (cut_comp == 0) return s.ends.empty();
    if (s.ends.size() != 1) return false;
    const End& e = s.ends[0];
    return e.edge == cut_edge &&
           (e.target == kTopTok ||
            (is_circle(cut_edge) && e.target == kBottomTok));
  }

  SlicedTangle run() {
    State s;
    s.fired.assign(ncross, 0);
    s.germ_drawn.assign(circle_base + 2 * ncirc, 0);
    s.comp_closed.assign(L.component_count() + 1, 0);
    SlicedTangle out;
    if (cut_comp > 0) {
      out.bottom = {{1, cut_comp}};
      if (is_circle(cut_edge)) {
        // open circle: an inert strand from bottom to top
        s.ends.push_back({cut_edge, kBottomTok, 0});
        int j = circle_index(cut_edge);
        s.germ_drawn[circle_base + 2 * j] = s.germ_drawn[circle_base + 2 * j + 1] = 1;
      } else {
        s.ends.push_back({cut_edge, low_real_germ(), 0});
      }
    }
    if (!solve(s, 0))
      throw internal_error("no Morse word found for " +
                           (L.name.empty() ? std::string("link") : L.name));
    out.slices = std::move(s.word);
    out.validate();
    return out;
  }
};

// Insert curls so every component's blackboard framing matches the declared
// one; the regular-crossing writhe is what the word already realizes.
void realize_framings(const PDLink& L, SlicedTangle& t) {
  for (int i = 1; i <= L.component_count(); ++i) {
    int need = L.framing(i) - L.self_writhe(i);
    if (need == 0) continue;
    std::vector<BObject> levels = t.levels();
    size_t at = levels.size();
    int pos = -1;
    for (size_t l = 0; l < levels.size() && pos < 0; ++l)
      for (size_t p = 0; p < levels[l].size(); ++p)
        if (levels[l][p].eps == 1 && levels[l][p].comp == i) {
          at = l;
          pos = static_cast<int>(p);
          break;
        }
    if (pos < 0) throw internal_error("component never points down");
    std::vector<Slice> curls;
    for (int c = 0; c < std::abs(need); ++c) {
      std::vector<Slice> one = need > 0 ? pos_curl(pos, i) : neg_curl(pos, i);
      curls.insert(curls.end(), one.begin(), one.end());
    }
    t.slices.insert(t.slices.begin() + static_cast<long>(at), curls.begin(),
                    curls.end());
  }
  t.validate();
}

}  // namespace

SlicedTangle slice(const PDLink& link, SliceStrategy st) {
  Planner pl(link, st, 0);
  SlicedTangle t = pl.run();
  realize_framings(link, t);
  return t;
}

SlicedTangle cut(const PDLink& link, int i, SliceStrategy st) {
  (void)link.component_edges(i);
  Planner pl(link, st, i);
  SlicedTangle t = pl.run();
  realize_framings(link, t);
  return t;
}

SingularLink as_singular(const PDLink& link, int cut_comp, SliceStrategy st) {
  SingularLink s;
  s.word = cut_comp > 0 ? cut(link, cut_comp, st) : slice(link, st);
  for (int i = 1; i <= link.component_count(); ++i) {
    s.components.push_back(i);
    s.framing.push_back(link.framing(i));
  }
  return s;
}

FormalTangleSum resolve_singularities(const SlicedTangle& t) {
  std::vector<size_t> spots;
  for (size_t i = 0; i < t.slices.size(); ++i)
    if (t.slices[i].kind == SliceKind::XSing) spots.push_back(i);
  const int m = static_cast<int>(spots.size());
  FormalTangleSum out;
  for (long mask = 0; mask < (1L << m); ++mask) {
    SlicedTangle term = t;
    int sign = 1;
    for (int j = 0; j < m; ++j) {
      bool under = (mask >> (m - 1 - j)) & 1;
      term.slices[spots[j]].kind = under ? SliceKind::XNeg : SliceKind::XPos;
      if (under) sign = -sign;
    }
    out.terms.push_back({sign, std::move(term)});
  }
  return out;
}

FormalTangleSum resolve_singularities(const SingularLink& t) {
  return resolve_singularities(t.word);
}

const std::vector<std::string>& corpus_ids() {
  static const std::vector<std::string> ids = {
      "unknot", "unknot_f2", "trefoil", "trefoil_f2", "hopf_pp", "hopf_mm",
      "torus24", "chain3",   "split2",  "kink_p",     "kink_m",  "fig_inf",
  };
  return ids;
}

std::vector<SlicedTangle> double_unknot_framing_corpus() {
  std::vector<SlicedTangle> out;
  auto unknot = [](int comp, int framing) {
    SlicedTangle t;
    t.slices.push_back(Slice::cup(0, comp, true));
    for (int c = 0; c < std::abs(framing); ++c) {
      std::vector<Slice> one = framing > 0 ? pos_curl(0, comp) : neg_curl(0, comp);
      t.slices.insert(t.slices.end(), one.begin(), one.end());
    }
    t.slices.push_back(Slice::cap(0, false));
    return t;
  };
  for (int f : {-4, -2, 0, 2, 4}) out.push_back(unknot(1, f));
  for (int f1 : {-2, 0, 2})
    for (int f2 : {-2, 0, 2}) {
      SlicedTangle a = unknot(1, f1), b = unknot(2, f2);
      SlicedTangle t;
      t.slices = a.slices;
      t.slices.insert(t.slices.end(), b.slices.begin(), b.slices.end());
      out.push_back(t);
    }
  for (SlicedTangle& t : out) t.validate();
  return out;
}

std::vector<MovePair> move_equivalence_corpus() {
  std::mt19937 rng(20240817u);
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  std::vector<MovePair> out;

  auto random_base = [&](int width) {
    SlicedTangle t;
    for (int i = 0; i < width; ++i)
      t.bottom.push_back({pick(2) ? 1 : -1, pick(2) + 1});
    int extra = pick(3);
    for (int j = 0; j < extra && width >= 2; ++j) {
      int p = pick(width - 1);
      t.slices.push_back(pick(2) ? Slice::xpos(p) : Slice::xneg(p));
    }
    return t;
  };

  for (int i = 0; i < 8; ++i) {  // r2 both orders
    SlicedTangle base = random_base(2 + pick(2));
    MovePair mp;
    mp.tag = "r2";
    mp.lhs = base;
    mp.rhs = base;
    int p = pick(static_cast<int>(base.bottom.size()) - 1);
    if (i % 2) {
      mp.lhs.slices.push_back(Slice::xpos(p));
      mp.lhs.slices.push_back(Slice::xneg(p));
    } else {
      mp.lhs.slices.push_back(Slice::xneg(p));
      mp.lhs.slices.push_back(Slice::xpos(p));
    }
    out.push_back(mp);
  }

  for (int i = 0; i < 8; ++i) {  // r3
    SlicedTangle base = random_base(3 + pick(2));
    MovePair mp;
    mp.tag = "r3";
    mp.lhs = base;
    mp.rhs = base;
    int p = pick(static_cast<int>(base.bottom.size()) - 2);
    mp.lhs.slices.push_back(Slice::xpos(p));
    mp.lhs.slices.push_back(Slice::xpos(p + 1));
    mp.lhs.slices.push_back(Slice::xpos(p));
    mp.rhs.slices.push_back(Slice::xpos(p + 1));
    mp.rhs.slices.push_back(Slice::xpos(p));
    mp.rhs.slices.push_back(Slice::xpos(p + 1));
    out.push_back(mp);
  }

  for (int i = 0; i < 8; ++i) {  // r1 cancelling pair on a downward point
    SlicedTangle base = random_base(1 + pick(3));
    std::vector<BObject> levels = base.levels();
    const BObject& top = levels.back();
    int p = -1;
    for (size_t q = 0; q < top.size(); ++q)
      if (top[q].eps == 1) p = static_cast<int>(q);
    if (p < 0) {
      --i;
      continue;
    }
    MovePair mp;
    mp.tag = "r1pair";
    mp.lhs = base;
    mp.rhs = base;
    int comp = top[p].comp;
    for (const Slice& s : pos_curl(p, comp)) mp.lhs.slices.push_back(s);
    for (const Slice& s : neg_curl(p, comp)) mp.lhs.slices.push_back(s);
    out.push_back(mp);
  }

  for (int i = 0; i < 8; ++i) {  // far commutation
    SlicedTangle base = random_base(4 + pick(2));
    int n = static_cast<int>(base.bottom.size());
    int p = pick(n - 3);
    int q = p + 2 + pick(n - p - 3 > 0 ? n - p - 3 : 1);
    if (q > n - 2) q = n - 2;
    MovePair mp;
    mp.tag = "slide";
    mp.lhs = base;
    mp.rhs = base;
    Slice s1 = pick(2) ? Slice::xpos(p) : Slice::xneg(p);
    Slice s2 = pick(2) ? Slice::xpos(q) : Slice::xneg(q);
    mp.lhs.slices.push_back(s1);
    mp.lhs.slices.push_back(s2);
    mp.rhs.slices.push_back(s2);
    mp.rhs.slices.push_back(s1);
    out.push_back(mp);
  }

  for (int f : {2, -2, 4}) {  // even framing change on the unknot
    MovePair mp;
    mp.tag = "framing";
    mp.framing_shift = f;
    mp.lhs.slices = {Slice::cup(0, 1, true), Slice::cap(0, false)};
    mp.rhs.slices.push_back(Slice::cup(0, 1, true));
    for (int c = 0; c < std::abs(f); ++c)
      for (const Slice& s : f > 0 ? pos_curl(0, 1) : neg_curl(0, 1))
        mp.rhs.slices.push_back(s);
    mp.rhs.slices.push_back(Slice::cap(0, false));
    out.push_back(mp);
  }

  for (MovePair& mp : out) {
    mp.lhs.validate();
    mp.rhs.validate();
  }
  return out;
}

}  // namespace relink
