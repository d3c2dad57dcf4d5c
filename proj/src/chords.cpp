#include "relink/chords.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "relink/error.hpp"
#include "textio.hpp"

namespace relink {

Skeleton Skeleton::circles(int n) {
  Skeleton s;
  s.comps.assign(n, CompKind::Circle);
  return s;
}

bool Skeleton::closed() const {
  for (CompKind k : comps)
    if (k == CompKind::Interval) return false;
  return true;
}

int Skeleton::interval_count() const {
  int n = 0;
  for (CompKind k : comps)
    if (k == CompKind::Interval) ++n;
  return n;
}

namespace {

std::map<int, int> partner_map(const ChordDiagram& d) {
  std::map<int, int> partner;
  for (auto [a, b] : d.chords) {
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

}  // namespace

void ChordDiagram::validate() const {
  if (points.size() != skeleton.comps.size())
    throw validation_error("chord diagram: " + std::to_string(points.size()) +
                           " point sequences for " +
                           std::to_string(skeleton.comps.size()) + " components");
  std::set<int> labels;
  for (const auto& seq : points)
    for (int p : seq)
      if (!labels.insert(p).second)
        throw validation_error("chord diagram: endpoint " + std::to_string(p) +
                               " appears twice");
  std::set<int> used;
  for (auto [a, b] : chords) {
    if (a == b)
      throw validation_error("chord diagram: chord joins endpoint " +
                             std::to_string(a) + " to itself");
    for (int p : {a, b}) {
      if (!labels.count(p))
        throw validation_error("chord diagram: chord uses unknown endpoint " +
                               std::to_string(p));
      if (!used.insert(p).second)
        throw validation_error("chord diagram: endpoint " + std::to_string(p) +
                               " lies on two chords");
    }
  }
  if (used.size() != labels.size())
    throw validation_error("chord diagram: " +
                           std::to_string(labels.size() - used.size()) +
                           " endpoint(s) without a chord");
}

std::vector<int> ChordDiagram::code() const {
  const int n = skeleton.size();
  std::vector<int> head;
  head.push_back(n);
  for (CompKind k : skeleton.comps)
    head.push_back(k == CompKind::Circle ? 0 : 1);
  for (const auto& seq : points) head.push_back(static_cast<int>(seq.size()));

  std::map<int, int> partner = partner_map(*this);
  std::vector<int> rot(n, 0);
  std::vector<int> best;

  auto consider = [&]() {
    std::vector<int> order;
    for (int i = 0; i < n; ++i) {
      const auto& seq = points[i];
      for (size_t j = 0; j < seq.size(); ++j)
        order.push_back(seq[(rot[i] + j) % seq.size()]);
    }
    std::map<int, int> index;
    for (size_t p = 0; p < order.size(); ++p) index[order[p]] = static_cast<int>(p);
    std::vector<int> tail;
    for (int p : order) tail.push_back(index[partner[p]]);
    if (best.empty() || tail < best) best = tail;
  };

  auto sweep = [&](auto&& self, int i) -> void {
    if (i == n) {
      consider();
      return;
    }
    int turns = 1;
    if (skeleton.comps[i] == CompKind::Circle && !points[i].empty())
      turns = static_cast<int>(points[i].size());
    for (rot[i] = 0; rot[i] < turns; ++rot[i]) self(self, i + 1);
    rot[i] = 0;
  };
  sweep(sweep, 0);
  if (best.empty()) consider();

  head.insert(head.end(), best.begin(), best.end());
  return head;
}

ChordDiagram ChordDiagram::canonical() const {
  std::vector<int> c = code();
  const int n = c[0];
  ChordDiagram out;
  out.skeleton = skeleton;
  out.name = name;
  int at = 1 + n;
  int label = 1;
  for (int i = 0; i < n; ++i) {
    int k = c[at + i];
    std::vector<int> seq;
    for (int j = 0; j < k; ++j) seq.push_back(label++);
    out.points.push_back(seq);
  }
  const int* tail = c.data() + 1 + 2 * n;
  const int total = label - 1;
  for (int p = 0; p < total; ++p)
    if (p < tail[p]) out.chords.push_back({p + 1, tail[p] + 1});
  return out;
}

bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
  return a.code() == b.code();
}

bool operator!=(const ChordDiagram& a, const ChordDiagram& b) { return !(a == b); }

bool operator<(const ChordDiagram& a, const ChordDiagram& b) {
  return a.code() < b.code();
}

std::string ChordDiagram::to_string() const {
  std::ostringstream out;
  if (!name.empty()) out << "diagram " << name << "\n";
  for (int i = 0; i < skeleton.size(); ++i) {
    out << (skeleton.comps[i] == CompKind::Circle ? "circle (" : "interval (");
    for (size_t j = 0; j < points[i].size(); ++j) {
      if (j) out << " ";
      out << points[i][j];
    }
    out << ")\n";
  }
  for (auto [a, b] : chords) out << "chord " << a << " " << b << "\n";
  return out.str();
}

ChordDiagram ChordDiagram::parse(const std::string& text, const std::string& where) {
  LineReader r = LineReader::from_text(text, where);
  ChordDiagram d;
  std::string line;
  while (r.next(line)) {
    std::vector<std::string> words = split_ws(line);
    const std::string& key = words[0];
    auto as_int = [&](const std::string& w) {
      try {
        return std::stoi(w);
      } catch (...) {
        r.fail("expected an integer, got '" + w + "'");
      }
    };
    if (key == "diagram") {
      if (words.size() != 2) r.fail("diagram wants one name");
      d.name = words[1];
    } else if (key == "circle" || key == "interval") {
      size_t lb = line.find('(');
      size_t rb = line.rfind(')');
      if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        r.fail(key + " wants a parenthesized endpoint list");
      d.skeleton.comps.push_back(key == "circle" ? CompKind::Circle
                                                 : CompKind::Interval);
      std::vector<int> seq;
      for (const std::string& w : split_ws(line.substr(lb + 1, rb - lb - 1)))
        seq.push_back(as_int(w));
      d.points.push_back(seq);
    } else if (key == "chord") {
      if (words.size() != 3) r.fail("chord wants two endpoint labels");
      d.chords.push_back({as_int(words[1]), as_int(words[2])});
    } else {
      r.fail("unknown directive '" + key + "'");
    }
  }
  try {
    d.validate();
  } catch (const Error& e) {
    throw parse_error(where + ": " + e.what());
  }
  return d;
}

ChordDiagram ChordDiagram::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw config_error("cannot open " + path);
  std::ostringstream text;
  text << f.rdbuf();
  return parse(text.str(), path);
}

ChordDiagram ChordDiagram::bundled(const std::string& id) {
  return load(std::string(RELINK_DATA_DIR) + "/corpus/" + id + ".diagram");
}

void DiagramCombination::add(const Rat& c, const ChordDiagram& d) {
  if (c == 0) return;
  ChordDiagram cd = d.canonical();
  std::vector<int> key = cd.code();
  auto it = std::lower_bound(
      terms.begin(), terms.end(), key,
      [](const auto& t, const std::vector<int>& k) { return t.second.code() < k; });
  if (it != terms.end() && it->second.code() == key) {
    it->first += c;
    if (it->first == 0) terms.erase(it);
  } else {
    terms.insert(it, {c, cd});
  }
}

std::string DiagramCombination::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) out << " + ";
    out << "(" << rat_to_string(terms[i].first) << ")*[";
    const ChordDiagram& d = terms[i].second;
    for (int c = 0; c < d.skeleton.size(); ++c) {
      if (c) out << " ";
      out << (d.skeleton.comps[c] == CompKind::Circle ? "(" : "<");
      for (size_t j = 0; j < d.points[c].size(); ++j) {
        if (j) out << " ";
        out << d.points[c][j];
      }
      out << (d.skeleton.comps[c] == CompKind::Circle ? ")" : ">");
    }
    for (auto [a, b] : d.chords) out << " " << a << "-" << b;
    out << "]";
  }
  return out.str();
}

namespace {

void matchings(std::vector<int> free, std::vector<std::pair<int, int>>& cur,
               const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
  if (free.empty()) {
    emit(cur);
    return;
  }
  int a = free[0];
  for (size_t i = 1; i < free.size(); ++i) {
    std::vector<int> rest;
    for (size_t j = 1; j < free.size(); ++j)
      if (j != i) rest.push_back(free[j]);
    cur.push_back({a, free[i]});
    matchings(rest, cur, emit);
    cur.pop_back();
  }
}

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ChordDiagram> enumerate_diagrams(const Skeleton& s, int m) {
  if (m < 0) throw config_error("enumerate_diagrams: negative degree");
  const int n = s.size();
  std::map<std::vector<int>, ChordDiagram> seen;
  if (n == 0) {
    if (m == 0) return {};
    return {};
  }
  std::vector<int> labels;
  for (int p = 1; p <= 2 * m; ++p) labels.push_back(p);
  std::vector<int> ccur;
  compositions(2 * m, n, ccur, [&](const std::vector<int>& counts) {
    std::vector<std::vector<int>> seqs;
    int at = 0;
    for (int c : counts) {
      seqs.push_back(std::vector<int>(labels.begin() + at, labels.begin() + at + c));
      at += c;
    }
    std::vector<std::pair<int, int>> mcur;
    matchings(labels, mcur, [&](const std::vector<std::pair<int, int>>& match) {
      ChordDiagram d;
      d.skeleton = s;
      d.points = seqs;
      d.chords = match;
      ChordDiagram cd = d.canonical();
      seen.emplace(cd.code(), cd);
    });
  });
  std::vector<ChordDiagram> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

std::vector<DiagramCombination> four_term_combinations(const Skeleton& s, int m) {
  std::vector<DiagramCombination> out;
  if (m < 2) return out;
  std::map<std::string, DiagramCombination> seen;
  for (const ChordDiagram& d : enumerate_diagrams(s, m)) {
    std::map<int, int> partner = partner_map(d);
    for (int ci = 0; ci < d.skeleton.size(); ++ci) {
      const auto& seq = d.points[ci];
      const int k = static_cast<int>(seq.size());
      if (k < 2) continue;
      const bool circle = d.skeleton.comps[ci] == CompKind::Circle;
      for (int sp = 0; sp < (circle ? k : k - 1); ++sp) {
        int f = seq[sp];
        int e = seq[(sp + 1) % k];
        if (partner[e] == f) continue;
        int f2 = partner[f];

        auto placed = [&](int target, bool after) {
          ChordDiagram p = d;
          for (auto& sq : p.points) {
            auto it = std::find(sq.begin(), sq.end(), e);
            if (it != sq.end()) sq.erase(it);
          }
          for (auto& sq : p.points) {
            auto it = std::find(sq.begin(), sq.end(), target);
            if (it != sq.end()) {
              sq.insert(after ? it + 1 : it, e);
              break;
            }
          }
          return p;
        };

        DiagramCombination rel;
        rel.add(1, placed(f, false));
        rel.add(-1, placed(f, true));
        rel.add(1, placed(f2, false));
        rel.add(-1, placed(f2, true));
        if (rel.empty()) continue;
        if (rel.terms[0].first < 0)
          for (auto& t : rel.terms) t.first = -t.first;
        std::ostringstream key;
        for (const auto& t : rel.terms) {
          key << rat_to_string(t.first) << ":";
          for (int x : t.second.code()) key << x << ",";
          key << ";";
        }
        seen.emplace(key.str(), rel);
      }
    }
  }
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

ChordDiagram cut_diagram(const ChordDiagram& d, int comp, int gap) {
  d.validate();
  if (comp < 1 || comp > d.skeleton.size())
    throw config_error("cut_diagram: no component " + std::to_string(comp));
  if (d.skeleton.comps[comp - 1] != CompKind::Circle)
    throw config_error("cut_diagram: component " + std::to_string(comp) +
                       " is not a circle");
  const auto& seq = d.points[comp - 1];
  const int k = static_cast<int>(seq.size());
  if (gap < 0 || gap >= std::max(k, 1))
    throw config_error("cut_diagram: gap " + std::to_string(gap) +
                       " out of range for " + std::to_string(k) + " endpoints");
  ChordDiagram out = d;
  out.skeleton.comps[comp - 1] = CompKind::Interval;
  std::vector<int> opened;
  for (int j = 0; j < k; ++j) opened.push_back(seq[(gap + j) % k]);
  out.points[comp - 1] = opened;
  return out;
}

ChordDiagram underlying_diagram(const SingularLink& t) {
  const SlicedTangle& w = t.word;
  const std::vector<BObject> levs = w.levels();
  const int nlev = static_cast<int>(levs.size());

  std::vector<int> offset(nlev + 1, 0);
  for (int l = 0; l < nlev; ++l)
    offset[l + 1] = offset[l] + static_cast<int>(levs[l].size());
  const int nsite = offset[nlev];
  auto site = [&](int l, int p) { return offset[l] + p; };

  struct Edge {
    int a = -1, b = -1;  // site ids
    int mark = 0;        // chord endpoint label, 0 for none
  };
  std::vector<Edge> edges;
  std::vector<int> below_edge(nsite, -1), above_edge(nsite, -1);

  auto vert = [&](int sa, int sb, int mark) {
    int id = static_cast<int>(edges.size());
    edges.push_back({sa, sb, mark});
    above_edge[sa] = id;
    below_edge[sb] = id;
  };

  int sing = 0;
  for (size_t k = 0; k < w.slices.size(); ++k) {
    const Slice& s = w.slices[k];
    const int l = static_cast<int>(k);
    const int W = static_cast<int>(levs[k].size());
    switch (s.kind) {
      case SliceKind::Cup: {
        for (int q = 0; q < s.pos; ++q) vert(site(l, q), site(l + 1, q), 0);
        for (int q = s.pos; q < W; ++q) vert(site(l, q), site(l + 1, q + 2), 0);
        int id = static_cast<int>(edges.size());
        edges.push_back({site(l + 1, s.pos), site(l + 1, s.pos + 1), 0});
        below_edge[site(l + 1, s.pos)] = below_edge[site(l + 1, s.pos + 1)] = id;
        break;
      }
      case SliceKind::Cap: {
        for (int q = 0; q < s.pos; ++q) vert(site(l, q), site(l + 1, q), 0);
        for (int q = s.pos + 2; q < W; ++q) vert(site(l, q), site(l + 1, q - 2), 0);
        int id = static_cast<int>(edges.size());
        edges.push_back({site(l, s.pos), site(l, s.pos + 1), 0});
        above_edge[site(l, s.pos)] = above_edge[site(l, s.pos + 1)] = id;
        break;
      }
      case SliceKind::XPos:
      case SliceKind::XNeg:
      case SliceKind::XSing:
      case SliceKind::Flip: {
        for (int q = 0; q < W; ++q)
          if (q != s.pos && q != s.pos + 1) vert(site(l, q), site(l + 1, q), 0);
        int ma = 0, mb = 0;
        if (s.kind == SliceKind::XSing) {
          ma = 2 * sing + 1;
          mb = 2 * sing + 2;
          ++sing;
        }
        vert(site(l, s.pos), site(l + 1, s.pos + 1), ma);
        vert(site(l, s.pos + 1), site(l + 1, s.pos), mb);
        break;
      }
      case SliceKind::Chord:
        throw validation_error(
            "underlying_diagram: word contains a classical chord slice");
    }
  }

  std::vector<bool> visited(nsite, false);
  std::map<int, std::vector<int>> comp_marks;
  std::map<int, int> comp_walks;
  auto germ = [&](int sid) {
    int l = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), sid) -
                             offset.begin()) - 1;
    return levs[l][sid - offset[l]];
  };

  auto walk = [&](int start) {
    const int comp = germ(start).comp;
    ++comp_walks[comp];
    auto& marks = comp_marks[comp];
    int cur = start;
    while (true) {
      visited[cur] = true;
      int eid = germ(cur).eps > 0 ? below_edge[cur] : above_edge[cur];
      if (eid < 0) break;  // open end
      const Edge& e = edges[eid];
      if (e.mark) marks.push_back(e.mark);
      int next = e.a == cur ? e.b : e.a;
      if (germ(next).comp != comp)
        throw validation_error("underlying_diagram: component changes along a strand");
      if (next == start) break;
      cur = next;
    }
  };

  int open_comp = 0;
  if (!w.bottom.empty() || !levs.back().empty()) {
    if (!w.is_one_one())
      throw validation_error("underlying_diagram: boundary is not (1,1)");
    open_comp = w.bottom[0].comp;
    walk(site(nlev - 1, 0));
  }
  for (int sid = 0; sid < nsite; ++sid)
    if (!visited[sid]) walk(sid);
  for (auto [c, n] : comp_walks)
    if (n != 1)
      throw validation_error("underlying_diagram: component " + std::to_string(c) +
                             " splits into " + std::to_string(n) + " strands");

  ChordDiagram d;
  for (int c : t.components) {
    if (!comp_walks.count(c))
      throw validation_error("underlying_diagram: component " + std::to_string(c) +
                             " missing from the word");
    d.skeleton.comps.push_back(c == open_comp ? CompKind::Interval
                                              : CompKind::Circle);
    d.points.push_back(comp_marks[c]);
  }
  for (int j = 0; j < sing; ++j) d.chords.push_back({2 * j + 1, 2 * j + 2});
  d.validate();
  return d;
}

}  // namespace relink
