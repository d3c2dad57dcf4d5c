#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "relink/colors.hpp"
#include "relink/expr.hpp"
#include "relink/pd.hpp"
#include "relink/quantum.hpp"
#include "relink/ribbon.hpp"
#include "relink/slice.hpp"

using namespace relink;

namespace {

Series S(const std::string& text) { return parse_series_expr(text); }

// Colors for a parsed link: declared labels for parametric data, else "1".
ColorAssignment file_colors(const RibbonDatum& rd, const PDLink& L) {
  ColorAssignment c;
  c.algebra = rd.algebra();
  for (int i = 1; i <= L.component_count(); ++i) {
    std::string lab = L.color_label(i);
    c.bind(i, rd.parametric() && !lab.empty() ? lab : "1");
  }
  return c;
}

Series spow(const Series& s, int k) {
  Series out = S("1");
  Series base = k < 0 ? s.inverse() : s;
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

SerMat scale(const SerMat& m, const Series& s) {
  SerMat out = m;
  for (Series& e : out.a) e = e * s;
  return out;
}

int count_kind(const SlicedTangle& t, SliceKind k) {
  int n = 0;
  for (const Slice& s : t.slices) n += s.kind == k;
  return n;
}

// Close the open component of a (1,1) word around the left side.
SlicedTangle close_cut(const SlicedTangle& w, int comp) {
  SlicedTangle t;
  t.slices.push_back(Slice::cup(0, comp, false));
  for (Slice s : w.slices) {
    ++s.pos;
    t.slices.push_back(s);
  }
  t.slices.push_back(Slice::cap(0, true));
  t.validate();
  return t;
}

Error::Kind kind_of(const std::string& text) {
  try {
    (void)parse_pd(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a parse failure");
  return Error::Kind::Internal;
}

std::string message_of(const std::string& text) {
  try {
    (void)parse_pd(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("tangles") {

TEST_CASE("zero-crossing unknot parses") {
  PDLink L = parse_pd("link u\nO[1]\n");
  CHECK(L.component_count() == 1);
  CHECK(L.crossings.empty());
  CHECK(L.component_edges(1) == std::vector<int>{1});
  CHECK(L.framing(1) == 0);
  CHECK(L.framings_even());
  CHECK(L.double_points() == 0);
}

TEST_CASE("orientation inference on the bundled corpus") {
  PDLink tre = PDLink::bundled("trefoil");
  CHECK(tre.component_count() == 1);
  CHECK(tre.crossings.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(tre.crossing_sign(k) == -1);
  CHECK(tre.self_writhe(1) == -3);

  PDLink hp = PDLink::bundled("hopf_pp");
  CHECK(hp.component_count() == 2);
  CHECK(hp.crossing_sign(0) == 1);
  CHECK(hp.crossing_sign(1) == 1);
  CHECK(hp.self_writhe(1) == 0);
  CHECK(hp.self_writhe(2) == 0);

  PDLink hm = PDLink::bundled("hopf_mm");
  CHECK(hm.crossing_sign(0) == -1);
  CHECK(hm.crossing_sign(1) == -1);

  PDLink t24 = PDLink::bundled("torus24");
  for (int k = 0; k < 4; ++k) CHECK(t24.crossing_sign(k) == 1);
  CHECK(t24.self_writhe(1) == 0);
  CHECK(t24.self_writhe(2) == 0);

  CHECK(PDLink::bundled("kink_p").self_writhe(1) == 1);
  CHECK(PDLink::bundled("kink_m").self_writhe(1) == -1);
  CHECK_FALSE(PDLink::bundled("kink_p").framings_even());

  PDLink ch = PDLink::bundled("chain3");
  CHECK(ch.component_count() == 3);
  CHECK(ch.component_edges(1) == std::vector<int>{1, 2});
  CHECK(ch.component_edges(3) == std::vector<int>{7, 8});
  CHECK(ch.color_label(1) == "alpha");
  CHECK(ch.color_label(2) == "beta");
  CHECK(ch.color_label(3) == "gamma");

  PDLink fi = PDLink::bundled("fig_inf");
  CHECK(fi.double_points() == 1);
  CHECK(fi.crossing_sign(0) == 0);
  CHECK(fi.framings_even());
}

TEST_CASE("printing and reparsing is stable") {
  for (const std::string& id : corpus_ids()) {
    PDLink L = PDLink::bundled(id);
    std::string text = L.to_string();
    PDLink back = PDLink::parse(text, id);
    INFO(id);
    CHECK(back.to_string() == text);
    CHECK(back.name == L.name);
    CHECK(back.component_count() == L.component_count());
    for (int i = 1; i <= L.component_count(); ++i) {
      CHECK(back.framing(i) == L.framing(i));
      CHECK(back.color_label(i) == L.color_label(i));
    }
  }
}

TEST_CASE("parse failures") {
  SUBCASE("edge label used three times") {
    std::string msg = message_of("link b\nX[1,2,3,1] X[1,4,2,3]\n");
    CHECK(msg.find("edge 1 appears 3") != std::string::npos);
    CHECK(kind_of("link b\nX[1,2,3,1] X[1,4,2,3]\n") == Error::Kind::Parse);
  }
  SUBCASE("dangling edge") {
    CHECK(kind_of("link c\nX[1,2,3,4]\n") == Error::Kind::Parse);
  }
  SUBCASE("unknown token") {
    CHECK(message_of("Y[1,2,3,4]\n").find("unknown token 'Y'") != std::string::npos);
  }
  SUBCASE("declared component count is checked") {
    CHECK(kind_of("components 2\nO[1]\n") == Error::Kind::Parse);
  }
  SUBCASE("framing for a missing component") {
    CHECK(message_of("O[1]\nframing 0 2\n").find("missing component 2") !=
          std::string::npos);
  }
  SUBCASE("circle edge reused") {
    CHECK(kind_of("O[1] O[1]\n") == Error::Kind::Parse);
  }
  SUBCASE("non-integer count") {
    CHECK(kind_of("components x\nO[1]\n") == Error::Kind::Parse);
  }
  SUBCASE("forced directions may clash") {
    std::string msg = message_of("Xp[3,2,4,1] Xm[2,3,1,4]\n");
    CHECK(msg.find("orientation") != std::string::npos);
  }
}

TEST_CASE("slicing shapes") {
  SlicedTangle u = slice(PDLink::bundled("unknot"));
  REQUIRE(u.slices.size() == 2);
  CHECK(u.slices[0].kind == SliceKind::Cup);
  CHECK(u.slices[1].kind == SliceKind::Cap);
  CHECK(u.is_closed());

  SlicedTangle uc = cut(PDLink::bundled("unknot"), 1);
  CHECK(uc.slices.empty());
  REQUIRE(uc.bottom.size() == 1);
  CHECK(uc.bottom[0].eps == 1);
  CHECK(uc.is_one_one());

  SlicedTangle h = slice(PDLink::bundled("hopf_pp"));
  CHECK(h.slices.size() == 6);
  CHECK(count_kind(h, SliceKind::Cup) == 2);
  CHECK(count_kind(h, SliceKind::XPos) == 2);
  CHECK(count_kind(h, SliceKind::Cap) == 2);

  SlicedTangle hm = slice(PDLink::bundled("hopf_mm"));
  CHECK(count_kind(hm, SliceKind::XNeg) == 2);
  CHECK(count_kind(hm, SliceKind::XPos) == 0);

  // 0-framed diagram of writhe -3: three compensating positive curls
  SlicedTangle tre = slice(PDLink::bundled("trefoil"));
  CHECK(count_kind(tre, SliceKind::XNeg) == 3);
  CHECK(count_kind(tre, SliceKind::XPos) == 3);

  // matching declared framing: the kink is its own curl
  SlicedTangle kp = cut(PDLink::bundled("kink_p"), 1);
  CHECK(count_kind(kp, SliceKind::XPos) == 1);
  CHECK(count_kind(kp, SliceKind::XNeg) == 0);

  CHECK(count_kind(slice(PDLink::bundled("fig_inf")), SliceKind::XSing) == 1);

  for (const std::string& id : corpus_ids()) {
    PDLink L = PDLink::bundled(id);
    for (SliceStrategy st : {SliceStrategy::Lex, SliceStrategy::Reverse}) {
      INFO(id);
      CHECK(slice(L, st).is_closed());
      for (int i = 1; i <= L.component_count(); ++i)
        CHECK(cut(L, i, st).is_one_one());
    }
  }
}

TEST_CASE("cut metadata") {
  SingularLink s = as_singular(PDLink::bundled("hopf_pp"), 1);
  CHECK(s.components == std::vector<int>{1, 2});
  CHECK(s.framing == std::vector<int>{0, 0});
  CHECK(s.double_points() == 0);
  CHECK(s.word.is_one_one());

  SingularLink fi = as_singular(PDLink::bundled("fig_inf"), 1);
  CHECK(fi.double_points() == 1);
  CHECK(fi.framings_even());
  CHECK_FALSE(as_singular(PDLink::bundled("kink_p"), 1).framings_even());
}

TEST_CASE("both strategies evaluate alike") {
  const RibbonDatum& gl = RibbonDatum::bundled("gl11");
  for (const std::string& id : {"trefoil", "hopf_pp", "torus24", "chain3"}) {
    PDLink L = PDLink::bundled(id);
    ColorAssignment c = file_colors(gl, L);
    Series lex = bracket(gl, c, cut(L, 1, SliceStrategy::Lex));
    Series rev = bracket(gl, c, cut(L, 1, SliceStrategy::Reverse));
    INFO(id);
    CHECK(lex == rev);
    CHECK_FALSE(lex.is_zero());
  }
  const RibbonDatum& sl = RibbonDatum::bundled("sl2");
  PDLink hp = PDLink::bundled("hopf_pp");
  ColorAssignment ones = file_colors(sl, hp);
  CHECK(sermat_equal(evaluate_F(sl, ones, slice(hp, SliceStrategy::Lex)),
                     evaluate_F(sl, ones, slice(hp, SliceStrategy::Reverse))));
}

TEST_CASE("golden brackets through the diagram pipeline") {
  const RibbonDatum& gl = RibbonDatum::bundled("gl11");
  Series theta = S("exp_h(-2*alpha^2 - alpha)");

  auto cut_bracket = [&](const std::string& id, int comp) {
    PDLink L = PDLink::bundled(id);
    return bracket(gl, file_colors(gl, L), cut(L, comp));
  };

  CHECK(cut_bracket("hopf_pp", 1) ==
        S("exp_h(-4*alpha*beta - beta) - exp_h(-4*alpha*beta - 2*alpha - beta)"));
  CHECK(cut_bracket("hopf_pp", 2) ==
        S("exp_h(-4*alpha*beta - alpha) - exp_h(-4*alpha*beta - 2*beta - alpha)"));
  CHECK(cut_bracket("trefoil", 1) == S("exp_h(2*alpha) - 1 + exp_h(-2*alpha)"));
  CHECK(cut_bracket("torus24", 1) ==
        S("exp_h(-8*alpha*beta - beta) + exp_h(-8*alpha*beta - 2*alpha - 3*beta)"
          " - exp_h(-8*alpha*beta - 2*alpha - beta)"
          " - exp_h(-8*alpha*beta - 4*alpha - 3*beta)"));
  CHECK(cut_bracket("kink_p", 1) == theta);
  CHECK(cut_bracket("kink_m", 1) == theta.inverse());
  CHECK(cut_bracket("unknot_f2", 1) == theta * theta);
  CHECK(cut_bracket("trefoil_f2", 1) == theta * theta * cut_bracket("trefoil", 1));
}

TEST_CASE("renormalized invariant from diagrams") {
  const RibbonDatum& gl = RibbonDatum::bundled("gl11");
  ColorAssignment ca;
  ca.algebra = gl.algebra();

  Series hopf = S("2 * h * exp_h(-4*alpha*beta - alpha - beta)");
  InvariantSeries h1 = F_prime(gl, ca, PDLink::bundled("hopf_pp"), 1);
  InvariantSeries h2 = F_prime(gl, ca, PDLink::bundled("hopf_pp"), 2);
  CHECK(h1.value == hopf);
  CHECK(h2.value == hopf);
  CHECK(h1.cut == 1);
  CHECK(h2.cut == 2);

  Series t24 = S("2 * h * (exp_h(-8*alpha*beta - alpha - beta)"
                 " + exp_h(-8*alpha*beta - 3*alpha - 3*beta))");
  CHECK(F_prime(gl, ca, PDLink::bundled("torus24"), 1).value == t24);
  CHECK(F_prime(gl, ca, PDLink::bundled("torus24"), 2).value == t24);

  CHECK(F_prime(gl, ca, PDLink::bundled("unknot"), 1).value ==
        gl.modified_dim(Poly::var("alpha")));
  CHECK(F_prime(gl, ca, PDLink::bundled("split2"), 1).value == Series());

  InvariantSeries q = Q_prime(gl, ca, PDLink::bundled("hopf_pp"), 1);
  CHECK(q.value == h1.value);

  CHECK_THROWS_AS((void)F_prime(gl, ca, PDLink::bundled("fig_inf"), 1), Error);
}

TEST_CASE("resolution of double points") {
  FormalTangleSum none = resolve_singularities(slice(PDLink::bundled("trefoil")));
  REQUIRE(none.terms.size() == 1);
  CHECK(none.terms[0].first == 1);

  FormalTangleSum two = resolve_singularities(as_singular(PDLink::bundled("fig_inf")));
  REQUIRE(two.terms.size() == 2);
  CHECK(two.terms[0].first == 1);
  CHECK(two.terms[1].first == -1);
  CHECK(count_kind(two.terms[0].second, SliceKind::XPos) == 1);
  CHECK(count_kind(two.terms[1].second, SliceKind::XNeg) == 1);
  CHECK(count_kind(two.terms[0].second, SliceKind::XSing) == 0);

  // sigma_1^2 on the cut Hopf, both crossings made double points
  SlicedTangle w;
  w.bottom = {{1, 1}};
  w.slices = {Slice::cup(1, 2, true), Slice::xsing(0), Slice::xsing(0),
              Slice::cap(1, false)};
  FormalTangleSum four = resolve_singularities(w);
  REQUIRE(four.terms.size() == 4);
  int signs[4] = {1, -1, -1, 1};
  for (int i = 0; i < 4; ++i) CHECK(four.terms[i].first == signs[i]);
  // the last double point varies fastest
  CHECK(four.terms[1].second.slices[1].kind == SliceKind::XPos);
  CHECK(four.terms[1].second.slices[2].kind == SliceKind::XNeg);
  CHECK(four.terms[2].second.slices[1].kind == SliceKind::XNeg);
  CHECK(four.terms[2].second.slices[2].kind == SliceKind::XPos);

  const RibbonDatum& gl = RibbonDatum::bundled("gl11");
  ColorAssignment c;
  c.algebra = gl.algebra();
  c.bind(1, "alpha");
  c.bind(2, "beta");
  Series direct = singular_bracket(gl, c, w);
  Series sum;
  for (const auto& [coeff, term] : four.terms) {
    Series b = bracket(gl, c, term);
    sum = coeff > 0 ? sum + b : sum - b;
  }
  CHECK(direct == sum);

  SingularLink fi = as_singular(PDLink::bundled("fig_inf"), 1);
  CHECK(singular_bracket(gl, c, fi.word) ==
        S("exp_h(-2*alpha^2 - alpha) - exp_h(2*alpha^2 + alpha)"));
}

TEST_CASE("closing a cut word recovers the closed evaluation") {
  const RibbonDatum& sl = RibbonDatum::bundled("sl2");
  for (const std::string& id : {"hopf_pp", "trefoil"}) {
    PDLink L = PDLink::bundled(id);
    ColorAssignment ones = file_colors(sl, L);
    SerMat closed = evaluate_F(sl, ones, slice(L));
    SerMat viacut = evaluate_F(sl, ones, close_cut(cut(L, 1), 1));
    INFO(id);
    CHECK(sermat_equal(closed, viacut));
    CHECK_FALSE(closed.at(0, 0).is_zero());
  }
  const RibbonDatum& gl = RibbonDatum::bundled("gl11");
  PDLink hp = PDLink::bundled("hopf_pp");
  ColorAssignment c = file_colors(gl, hp);
  CHECK(sermat_equal(evaluate_F(gl, c, close_cut(cut(hp, 1), 1)),
                     SerMat::zero(1, 1)));
}

TEST_CASE("closed corpus evaluations vanish for gl11") {
  const RibbonDatum& gl = RibbonDatum::bundled("gl11");
  for (const std::string& id : corpus_ids()) {
    PDLink L = PDLink::bundled(id);
    if (L.double_points() > 0) continue;
    SerMat m = evaluate_F(gl, file_colors(gl, L), slice(L));
    INFO(id);
    CHECK(sermat_equal(m, SerMat::zero(1, 1)));
  }
}

TEST_CASE("move corpus invariance") {
  std::vector<MovePair> pairs = move_equivalence_corpus();
  int counted[5] = {0, 0, 0, 0, 0};
  const std::vector<std::string> tags = {"r1pair", "r2", "r3", "slide", "framing"};
  for (const MovePair& mp : pairs)
    for (size_t i = 0; i < tags.size(); ++i)
      if (mp.tag == tags[i]) ++counted[i];
  CHECK(pairs.size() >= 30);
  CHECK(counted[0] == 8);
  CHECK(counted[1] == 8);
  CHECK(counted[2] == 8);
  CHECK(counted[3] == 8);
  CHECK(counted[4] == 3);

  const RibbonDatum& gl = RibbonDatum::bundled("gl11");
  const RibbonDatum& sl = RibbonDatum::bundled("sl2");
  ColorAssignment cgl = ColorAssignment::parse("gl11", "alpha,beta");
  ColorAssignment csl = ColorAssignment::parse("sl2", "1,1");
  Series theta_sl = S("exp_h(3/4)");
  for (size_t i = 0; i < pairs.size(); ++i) {
    const MovePair& mp = pairs[i];
    INFO(mp.tag << " #" << i);
    if (mp.tag == "framing") {
      SerMat lhs = evaluate_F(sl, csl, mp.lhs);
      SerMat rhs = evaluate_F(sl, csl, mp.rhs);
      CHECK(sermat_equal(rhs, scale(lhs, spow(theta_sl, mp.framing_shift))));
      CHECK(sermat_equal(evaluate_F(gl, cgl, mp.rhs), SerMat::zero(1, 1)));
    } else {
      CHECK(sermat_equal(evaluate_F(gl, cgl, mp.lhs), evaluate_F(gl, cgl, mp.rhs)));
    }
  }
}

TEST_CASE("framed unknot corpus") {
  std::vector<SlicedTangle> words = double_unknot_framing_corpus();
  REQUIRE(words.size() == 14);

  const RibbonDatum& gl = RibbonDatum::bundled("gl11");
  ColorAssignment cgl = ColorAssignment::parse("gl11", "alpha,beta");
  for (size_t i = 0; i < words.size(); ++i) {
    INFO("word #" << i);
    CHECK(sermat_equal(evaluate_F(gl, cgl, words[i]), SerMat::zero(1, 1)));
  }

  const RibbonDatum& sl = RibbonDatum::bundled("sl2");
  ColorAssignment csl = ColorAssignment::parse("sl2", "1,1");
  Series qd = S("exp_h(1/2) + exp_h(-1/2)");
  Series theta = S("exp_h(3/4)");
  const int singles[5] = {-4, -2, 0, 2, 4};
  for (int i = 0; i < 5; ++i) {
    INFO("framing " << singles[i]);
    CHECK(evaluate_F(sl, csl, words[i]).at(0, 0) == spow(theta, singles[i]) * qd);
  }
  int at = 5;
  for (int f1 : {-2, 0, 2})
    for (int f2 : {-2, 0, 2}) {
      INFO("framings " << f1 << "," << f2);
      CHECK(evaluate_F(sl, csl, words[at++]).at(0, 0) ==
            spow(theta, f1 + f2) * qd * qd);
    }
}

}  // TEST_SUITE
