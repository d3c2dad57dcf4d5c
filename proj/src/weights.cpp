#include "relink/weights.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "relink/engine.hpp"
#include "relink/error.hpp"
#include "relink/slice.hpp"

namespace relink {

namespace {

// Matrix acting on a dual slot that matches the action of a on the paired
// downward slot when the chord leg slides across the adjacent cup or cap.
Mat leg_transport(const Mat& a, const std::vector<int>& parity, int leg_parity) {
  int d = static_cast<int>(a.size());
  Mat b = mat_zero(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      if (a[c][r].is_zero()) continue;
      b[r][c] = (leg_parity * parity[c]) % 2 ? -a[c][r] : a[c][r];
    }
  return b;
}

struct Runner {
  const SuperAlgebra* alg = nullptr;
  const std::vector<Representation>* reps = nullptr;  // indexed by component
  std::vector<OmegaTerm> omega;
  EngineState<RatFunc> st;

  const Representation& rep_at(const BPoint& g) const { return (*reps)[g.comp]; }

  // Cup and cap tiles share one diagonal block: entry (a, a) carries the
  // pivot sign on the leftward side and 1 on the rightward side.
  std::vector<RatFunc> duality_block(const Representation& r, bool rightward) {
    int d = r.dim;
    std::vector<RatFunc> m(static_cast<size_t>(d) * d, RatFunc{});
    for (int a = 0; a < d; ++a) {
      bool neg = !rightward && r.parity[a] % 2;
      m[static_cast<size_t>(a) * d + a] = RatFunc::from_int(neg ? -1 : 1);
    }
    return m;
  }

  void cup(const Slice& s) {
    const Representation& r = (*reps)[s.comp];
    engine_apply(st, s.pos, 0, {r.dim, r.dim}, duality_block(r, s.rightward));
  }

  void cap(const Slice& s, const BObject& below) {
    const Representation& r = rep_at(below[s.pos]);
    engine_apply(st, s.pos, 2, {}, duality_block(r, s.rightward));
  }

  void flip(int pos, const BObject& below) {
    const Representation& rl = rep_at(below[pos]);
    const Representation& rr = rep_at(below[pos + 1]);
    int dl = rl.dim, dr = rr.dim;
    int64_t in_dim = static_cast<int64_t>(dl) * dr;
    std::vector<RatFunc> m(in_dim * in_dim, RatFunc{});
    for (int a = 0; a < dl; ++a)
      for (int b = 0; b < dr; ++b) {
        bool neg = rl.parity[a] % 2 && rr.parity[b] % 2;
        int64_t out = static_cast<int64_t>(b) * dl + a;
        int64_t in = static_cast<int64_t>(a) * dr + b;
        m[out * in_dim + in] = RatFunc::from_int(neg ? -1 : 1);
      }
    engine_apply(st, pos, 2, {dr, dl}, m);
  }

  void chord(int pos, const BObject& below) {
    const BPoint& gl = below[pos];
    const BPoint& gr = below[pos + 1];
    const Representation& rl = rep_at(gl);
    const Representation& rr = rep_at(gr);
    int dl = rl.dim, dr = rr.dim;
    int64_t in_dim = static_cast<int64_t>(dl) * dr;
    std::vector<RatFunc> m(in_dim * in_dim, RatFunc{});
    for (const OmegaTerm& t : omega) {
      Mat left = rl.action[t.i];
      if (gl.eps < 0) left = leg_transport(left, rl.parity, alg->parity[t.i]);
      Mat right = rr.action[t.j];
      if (gr.eps < 0) right = leg_transport(right, rr.parity, alg->parity[t.j]);
      int pj = alg->parity[t.j];
      RatFunc coef = RatFunc::from_rat(t.c);
      for (int kp = 0; kp < dl; ++kp)
        for (int k = 0; k < dl; ++k) {
          if (left[kp][k].is_zero()) continue;
          RatFunc lv = coef * left[kp][k];
          if ((pj * rl.parity[k]) % 2) lv = -lv;
          for (int lp = 0; lp < dr; ++lp)
            for (int l = 0; l < dr; ++l) {
              if (right[lp][l].is_zero()) continue;
              int64_t out = static_cast<int64_t>(kp) * dr + lp;
              int64_t in = static_cast<int64_t>(k) * dr + l;
              m[out * in_dim + in] = m[out * in_dim + in] + lv * right[lp][l];
            }
        }
    }
    engine_apply(st, pos, 2, {dl, dr}, m);
  }
};

}  // namespace

Mat evaluate_G(const ColorAssignment& colors, const ChordDiagram& d) {
  d.validate();
  const SuperAlgebra& alg = SuperAlgebra::bundled(colors.algebra);
  int n = static_cast<int>(d.skeleton.size());
  std::vector<Representation> reps(n + 1);
  for (int i = 1; i <= n; ++i) reps[i] = alg.representation(colors.label_of(i));

  SingularLink link = make_singular_representative(d, 0);
  const SlicedTangle& word = link.word;
  std::vector<BObject> levels = word.levels();

  Runner run;
  run.alg = &alg;
  run.reps = &reps;
  run.omega = alg.casimir_two_tensor();
  std::vector<int> dims;
  for (const BPoint& g : word.bottom) dims.push_back(reps[g.comp].dim);
  run.st = engine_identity(dims, RatFunc::from_int(1));

  for (size_t k = 0; k < word.slices.size(); ++k) {
    const Slice& s = word.slices[k];
    const BObject& below = levels[k];
    switch (s.kind) {
      case SliceKind::Cup:
        run.cup(s);
        break;
      case SliceKind::Cap:
        run.cap(s, below);
        break;
      case SliceKind::XPos:
      case SliceKind::XNeg:
      case SliceKind::Flip:
        run.flip(s.pos, below);
        break;
      case SliceKind::XSing:
        run.chord(s.pos, below);
        run.flip(s.pos, below);
        break;
      case SliceKind::Chord:
        run.chord(s.pos, below);
        break;
    }
  }

  int64_t rows = run.st.space_dim();
  int64_t cols = run.st.bottom_dim;
  Mat out = mat_zero(static_cast<int>(rows), static_cast<int>(cols));
  for (int64_t r = 0; r < rows; ++r)
    for (int64_t c = 0; c < cols; ++c) out[r][c] = run.st.a[r * cols + c];
  return out;
}

RatFunc what_W(const ColorAssignment& colors, const ChordDiagram& d) {
  if (d.skeleton.interval_count() != 1)
    throw config_error("what_W expects a skeleton with exactly one interval");
  Mat g = evaluate_G(colors, d);
  int n = static_cast<int>(g.size());
  const RatFunc& x = g[0][0];
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const RatFunc want = r == c ? x : RatFunc{};
      if (g[r][c] != want)
        throw validation_error("what_W: evaluation of " +
                               (d.name.empty() ? std::string("diagram") : d.name) +
                               " is not a scalar matrix");
    }
  return x;
}

RatFunc w_prime(const RibbonDatum& rd, const ColorAssignment& colors,
                const ChordDiagram& d, int comp) {
  if (!d.skeleton.closed())
    throw config_error("w_prime expects a closed skeleton");
  ChordDiagram cut = cut_diagram(d, comp);
  if (!rd.is_typical(colors.color(comp)))
    throw typicality_error("cut component " + std::to_string(comp) +
                           " carries an atypical color");
  return rd.d_zero(colors.color(comp)) * what_W(colors, cut);
}

}  // namespace relink
