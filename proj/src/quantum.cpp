#include "relink/quantum.hpp"

#include <map>
#include <tuple>

#include "relink/engine.hpp"
#include "relink/pd.hpp"

namespace relink {

namespace {

using Tile = std::vector<Series>;

// Tile cache for one (datum, coloring) evaluation context. All modules in a
// datum share one dimension, so slot dimensions are uniform and a tile is
// identified by its kind and the component pair it acts on.
class TileCtx {
 public:
  TileCtx(const RibbonDatum& rd, const ColorAssignment& colors)
      : rd_(rd), colors_(colors), d_(rd.dim()) {
    if (colors.algebra != rd.algebra())
      throw config_error("color assignment targets algebra " + colors.algebra +
                         " but the ribbon datum is " + rd.algebra());
  }

  int dim() const { return d_; }

  const RibbonModule& module(int comp) {
    auto it = modules_.find(comp);
    if (it != modules_.end()) return it->second;
    RibbonModule m = rd_.module(colors_.color(comp), colors_.label_of(comp));
    return modules_.emplace(comp, std::move(m)).first->second;
  }

  // s = +1 / -1 for the crossing of that writhe sign, 0 for a double point.
  const Tile& crossing(int s, const BPoint& x, const BPoint& y) {
    Key k{s, x.eps, y.eps, x.comp, y.comp};
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    Tile t = build_crossing(s, x, y);
    return cache_.emplace(std::move(k), std::move(t)).first->second;
  }

  Tile cup_values(int comp, bool rightward) {
    const RibbonModule& m = module(comp);
    Tile t(static_cast<size_t>(d_) * d_);
    for (int i = 0; i < d_; ++i)
      t[static_cast<size_t>(i) * d_ + i] =
          rightward ? Series::from_int(1) : m.cup_pivot[i];
    return t;
  }

  Tile cap_values(int comp, bool rightward) {
    const RibbonModule& m = module(comp);
    Tile t(static_cast<size_t>(d_) * d_);
    for (int i = 0; i < d_; ++i)
      t[static_cast<size_t>(i) * d_ + i] =
          rightward ? Series::from_int(1) : m.cap_pivot[i];
    return t;
  }

 private:
  using Key = std::tuple<int, int, int, int, int>;

  const RibbonDatum& rd_;
  const ColorAssignment& colors_;
  int d_;
  std::map<int, RibbonModule> modules_;
  std::map<Key, Tile> cache_;

  int par(int i) const { return rd_.parity()[i]; }

  Tile build_crossing(int s, const BPoint& x, const BPoint& y) {
    if (s == 0) {
      const Tile& pos = crossing(+1, x, y);
      const Tile& neg = crossing(-1, x, y);
      Tile t(pos.size());
      for (size_t i = 0; i < t.size(); ++i) t[i] = pos[i] - neg[i];
      return t;
    }
    if (x.eps > 0 && y.eps > 0) return downward_crossing(s, x.comp, y.comp);
    if (y.eps < 0) return rotated_right(s, x, y);
    return rotated_left(s, x, y);
  }

  // Both strands downward: the braiding composed with the super flip
  // (positive sign), or the flip composed with the inverse braiding.
  Tile downward_crossing(int s, int c1, int c2) {
    const int d = d_;
    Tile t(static_cast<size_t>(d) * d * d * d);
    if (s > 0) {
      SerMat R = rd_.braid(colors_.color(c1), colors_.color(c2));
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int v1 = 0; v1 < d; ++v1)
            for (int v2 = 0; v2 < d; ++v2) {
              const Series& e = R.at(b * d + a, v1 * d + v2);
              if (e.is_zero()) continue;
              Series val = (par(a) && par(b)) ? -e : e;
              t[(static_cast<size_t>(a) * d + b) * d * d + v1 * d + v2] = val;
            }
    } else {
      SerMat Rinv = rd_.braid_inverse(colors_.color(c2), colors_.color(c1));
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int v1 = 0; v1 < d; ++v1)
            for (int v2 = 0; v2 < d; ++v2) {
              const Series& e = Rinv.at(a * d + b, v2 * d + v1);
              if (e.is_zero()) continue;
              Series val = (par(v1) && par(v2)) ? -e : e;
              t[(static_cast<size_t>(a) * d + b) * d * d + v1 * d + v2] = val;
            }
    }
    return t;
  }

  // Right strand upward: route it around with the pivot duality. The inner
  // crossing keeps the flag: writhe is local to the crossing point, so
  // bending a strand does not change it.
  Tile rotated_right(int s, const BPoint& x, const BPoint& y) {
    EngineState<Series> st =
        engine_identity<Series>({d_, d_}, Series::from_int(1));
    engine_apply(st, 0, 0, {d_, d_}, cup_values(y.comp, false));
    BPoint yd{1, y.comp};
    engine_apply(st, 1, 2, {d_, d_}, crossing(s, yd, x));
    engine_apply(st, 2, 2, {}, cap_values(y.comp, false));
    return st.a;
  }

  // Left strand upward.
  Tile rotated_left(int s, const BPoint& x, const BPoint& y) {
    EngineState<Series> st =
        engine_identity<Series>({d_, d_}, Series::from_int(1));
    engine_apply(st, 2, 0, {d_, d_}, cup_values(x.comp, true));
    BPoint xd{1, x.comp};
    engine_apply(st, 1, 2, {d_, d_}, crossing(s, y, xd));
    engine_apply(st, 0, 2, {}, cap_values(x.comp, true));
    return st.a;
  }
};

SerMat evaluate_core(const RibbonDatum& rd, const ColorAssignment& colors,
                     const SlicedTangle& t, bool allow_singular) {
  if (!allow_singular && t.singular_count() > 0)
    throw validation_error(
        "singular word: resolve double points before evaluating F");
  for (int comp : t.components()) (void)colors.color(comp);

  TileCtx ctx(rd, colors);
  const int d = ctx.dim();
  std::vector<BObject> levels = t.levels();

  EngineState<Series> st = engine_identity<Series>(
      std::vector<int>(t.bottom.size(), d), Series::from_int(1));

  for (size_t k = 0; k < t.slices.size(); ++k) {
    const Slice& s = t.slices[k];
    const BObject& below = levels[k];
    switch (s.kind) {
      case SliceKind::XPos:
        engine_apply(st, s.pos, 2, {d, d},
                     ctx.crossing(+1, below[s.pos], below[s.pos + 1]));
        break;
      case SliceKind::XNeg:
        engine_apply(st, s.pos, 2, {d, d},
                     ctx.crossing(-1, below[s.pos], below[s.pos + 1]));
        break;
      case SliceKind::XSing:
        engine_apply(st, s.pos, 2, {d, d},
                     ctx.crossing(0, below[s.pos], below[s.pos + 1]));
        break;
      case SliceKind::Cup:
        engine_apply(st, s.pos, 0, {d, d},
                     ctx.cup_values(s.comp, s.rightward));
        break;
      case SliceKind::Cap:
        engine_apply(st, s.pos, 2, {}, ctx.cap_values(below[s.pos].comp,
                                                      s.rightward));
        break;
      case SliceKind::Flip:
      case SliceKind::Chord:
        throw validation_error("classical-only slice in a quantum word");
    }
  }

  SerMat out;
  out.rows = static_cast<int>(st.space_dim());
  out.cols = static_cast<int>(st.bottom_dim);
  out.a = std::move(st.a);
  return out;
}

Series scalar_of(const SerMat& m, const std::string& what) {
  if (m.rows != m.cols) throw internal_error("scalar_of: non-square");
  const Series zero;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (i == j) {
        if (!(m.at(i, j) == m.at(0, 0)))
          throw validation_error(what + ": non-scalar endomorphism (diagonal)");
      } else if (!(m.at(i, j) == zero)) {
        throw validation_error(what + ": non-scalar endomorphism");
      }
    }
  return m.at(0, 0);
}

}  // namespace

SerMat evaluate_F(const RibbonDatum& rd, const ColorAssignment& colors,
                  const SlicedTangle& t) {
  return evaluate_core(rd, colors, t, false);
}

Series bracket(const RibbonDatum& rd, const ColorAssignment& colors,
               const SlicedTangle& t) {
  if (t.singular_count() > 0)
    throw validation_error("bracket of a singular word: resolve first");
  if (t.is_closed()) return evaluate_core(rd, colors, t, false).at(0, 0);
  if (!t.is_one_one())
    throw validation_error("bracket needs a (1,1)-tangle or closed word");
  return scalar_of(evaluate_core(rd, colors, t, false), "bracket");
}

Series singular_bracket(const RibbonDatum& rd, const ColorAssignment& colors,
                        const SlicedTangle& t) {
  SerMat m = evaluate_core(rd, colors, t, true);
  if (t.is_closed()) return m.at(0, 0);
  if (!t.is_one_one())
    throw validation_error("bracket needs a (1,1)-tangle or closed word");
  return scalar_of(m, "singular_bracket");
}

Series qdim(const RibbonDatum& rd, const Poly& a) {
  ColorAssignment colors;
  colors.algebra = rd.algebra();
  colors.binding[1] = a;
  colors.label[1] = a.to_string();
  SlicedTangle t;
  t.slices = {Slice::cup(0, 1, true), Slice::cap(0, false)};
  return evaluate_core(rd, colors, t, false).at(0, 0);
}

Series modified_dim(const RibbonDatum& rd, const Poly& a) {
  return rd.modified_dim(a);
}

RatFunc d_zero(const RibbonDatum& rd, const Poly& a) { return rd.d_zero(a); }

InvariantSeries F_prime_word(const RibbonDatum& rd,
                             const ColorAssignment& colors,
                             const SlicedTangle& cut_word,
                             const std::string& link_name) {
  if (!cut_word.is_one_one())
    throw validation_error("F' expects a cut (1,1) word");
  int open_comp = cut_word.bottom[0].comp;
  if (!rd.is_typical(colors.color(open_comp)))
    throw typicality_error("cut component " + std::to_string(open_comp) +
                           " carries an atypical color");
  InvariantSeries out;
  out.value = rd.modified_dim(colors.color(open_comp)) *
              bracket(rd, colors, cut_word);
  out.link = link_name;
  out.cut = open_comp;
  for (auto& [comp, lab] : colors.label)
    out.colors += (out.colors.empty() ? "" : ",") + std::to_string(comp) +
                  "=" + lab;
  return out;
}

Series what_Q(const RibbonDatum& rd, const ColorAssignment& colors,
              const SlicedTangle& t) {
  return bracket(rd, colors, t);
}

namespace {

// Explicit bindings win; unbound components fall back to the labels carried
// by the link file.
ColorAssignment with_link_labels(const ColorAssignment& colors,
                                 const PDLink& link) {
  ColorAssignment ca = colors;
  for (int i = 1; i <= link.component_count(); ++i)
    if (!ca.has(i) && !link.color_label(i).empty())
      ca.bind(i, link.color_label(i));
  return ca;
}

}  // namespace

InvariantSeries F_prime(const RibbonDatum& rd, const ColorAssignment& colors,
                        const PDLink& link, int cut_comp) {
  ColorAssignment ca = with_link_labels(colors, link);
  SlicedTangle word = cut(link, cut_comp);
  return F_prime_word(rd, ca, word, link.name);
}

InvariantSeries Q_prime(const RibbonDatum& rd, const ColorAssignment& colors,
                        const PDLink& link, int cut_comp) {
  return F_prime(rd, colors, link, cut_comp);
}

namespace {

Mat coeff_matrix(const SerMat& m, int k) {
  int n = m.rows;
  Mat out = mat_zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = m.at(i, j).coefficient(k);
  return out;
}

// (tau o m o tau) entrywise with the Koszul signs of both flips.
Mat flip_conjugate(const Mat& m, const std::vector<int>& p) {
  int d = static_cast<int>(p.size());
  Mat out = mat_zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          RatFunc v = m[j * d + i][l * d + k];
          if (v.is_zero()) continue;
          if ((p[i] * p[j] + p[k] * p[l]) % 2) v = -v;
          out[i * d + j][k * d + l] = v;
        }
  return out;
}

void check_identity_word(const RibbonDatum& rd, const ColorAssignment& colors,
                         const SlicedTangle& t, const std::string& name,
                         ValidationReport& rep) {
  try {
    SerMat m = evaluate_F(rd, colors, t);
    SerMat id = SerMat::identity(m.rows);
    if (!sermat_equal(m, id)) rep.add(name, "word does not evaluate to the identity");
  } catch (const Error& e) {
    rep.add(name, e.what());
  }
}

}  // namespace

ValidationReport validate_ribbon(const RibbonDatum& rd) {
  ValidationReport rep;
  const int d = rd.dim();

  Poly x, y, z;
  if (rd.parametric()) {
    x = Poly::var(rd.param());
    y = Poly::var(rd.second_param());
    std::string third = "gamma";
    if (third == rd.param() || third == rd.second_param())
      third = rd.param() + "3";
    z = Poly::var(third);
  } else {
    x = y = z = Poly::from_int(1);
  }

  ColorAssignment c3;
  c3.algebra = rd.algebra();
  c3.binding = {{1, x}, {2, y}, {3, z}};
  c3.label = {{1, x.to_string()}, {2, y.to_string()}, {3, z.to_string()}};

  // R R^{-1} = Id for every orientation pattern (exercises the rotation
  // composites), on symbolic colors.
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      SlicedTangle t;
      t.bottom = {{e1, 1}, {e2, 2}};
      t.slices = {Slice::xpos(0), Slice::xneg(0)};
      check_identity_word(rd, c3, t,
                          std::string("r2(") + (e1 > 0 ? "+" : "-") +
                              (e2 > 0 ? "+" : "-") + ")",
                          rep);
      t.slices = {Slice::xneg(0), Slice::xpos(0)};
      check_identity_word(rd, c3, t,
                          std::string("r2'(") + (e1 > 0 ? "+" : "-") +
                              (e2 > 0 ? "+" : "-") + ")",
                          rep);
    }

  // Yang-Baxter as the braid relation on three symbolic colors.
  {
    SlicedTangle lhs, rhs;
    lhs.bottom = rhs.bottom = {{1, 1}, {1, 2}, {1, 3}};
    lhs.slices = {Slice::xpos(0), Slice::xpos(1), Slice::xpos(0)};
    rhs.slices = {Slice::xpos(1), Slice::xpos(0), Slice::xpos(1)};
    try {
      if (!sermat_equal(evaluate_F(rd, c3, lhs), evaluate_F(rd, c3, rhs)))
        rep.add("ybe", "braid relation fails on symbolic colors");
    } catch (const Error& e) {
      rep.add("ybe", e.what());
    }
  }

  // Zig-zag duality on both orientations.
  {
    SlicedTangle t;
    t.bottom = {{1, 1}};
    t.slices = {Slice::cup(1, 1, false), Slice::cap(0, false)};
    check_identity_word(rd, c3, t, "zigzag1", rep);
    t.slices = {Slice::cup(0, 1, true), Slice::cap(1, true)};
    check_identity_word(rd, c3, t, "zigzag2", rep);
    t.bottom = {{-1, 1}};
    t.slices = {Slice::cup(1, 1, true), Slice::cap(0, true)};
    check_identity_word(rd, c3, t, "zigzag3", rep);
    t.slices = {Slice::cup(0, 1, false), Slice::cap(1, false)};
    check_identity_word(rd, c3, t, "zigzag4", rep);
  }

  // Positive curl = twist scalar, negative curl = its inverse, and the
  // framed R1 pair cancels.
  try {
    Series theta = rd.module(x, "x").theta;
    SlicedTangle t;
    t.bottom = {{1, 1}};
    t.slices = pos_curl(0, 1);
    Series got = bracket(rd, c3, t);
    if (!(got == theta)) rep.add("curl+", "positive curl is not the twist");
    t.slices = neg_curl(0, 1);
    got = bracket(rd, c3, t);
    if (!(got == theta.inverse()))
      rep.add("curl-", "negative curl is not the inverse twist");
    t.slices = pos_curl(0, 1);
    for (const Slice& s : neg_curl(0, 1)) t.slices.push_back(s);
    check_identity_word(rd, c3, t, "r1pair", rep);
  } catch (const Error& e) {
    rep.add("curl", e.what());
  }

  // Semiclassical hinge: R = Id + O(h) and the symmetrized h^1 part equals
  // the classical Casimir two-tensor action; the twist starts at Casimir/2.
  try {
    SuperAlgebra g = SuperAlgebra::bundled(rd.algebra());
    Representation ra = g.representation(rd.parametric() ? rd.param() : "1");
    Representation rb =
        g.representation(rd.parametric() ? rd.second_param() : "1");
    if (ra.dim != d) {
      rep.add("semiclassical", "classical module dimension mismatch");
    } else {
      SerMat Rxy = rd.braid(x, y);
      SerMat Ryx = rd.braid(y, x);
      if (!mat_equal(coeff_matrix(Rxy, 0), mat_identity(d * d)))
        rep.add("semiclassical", "R does not start at the identity");
      Mat sym = mat_add(coeff_matrix(Rxy, 1),
                        flip_conjugate(coeff_matrix(Ryx, 1), rd.parity()));
      if (!mat_equal(sym, ra.omega_action(rb)))
        rep.add("semiclassical",
                "symmetrized h^1 part of R does not match the Casimir "
                "two-tensor action");
      RatFunc t1 = rd.module(x, "x").theta.coefficient(1);
      if (!(t1 == ra.casimir_scalar() * RatFunc(Poly::from_rat(Rat(1, 2)),
                                                Poly::from_int(1))))
        rep.add("semiclassical", "twist does not start at Casimir/2");
    }
  } catch (const Error& e) {
    rep.add("semiclassical", e.what());
  }

  // Modified dimension window and leading coefficient.
  try {
    Series dm = rd.modified_dim(x);
    if (dm.low_order() < 0) rep.add("dmod", "pole after rescaling");
    (void)rd.d_zero(x);
  } catch (const Error& e) {
    rep.add("dmod", e.what());
  }

  return rep;
}

}  // namespace relink
