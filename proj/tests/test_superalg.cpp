#include "doctest.h"
#include "relink/error.hpp"
#include "relink/superalg.hpp"

using namespace relink;

namespace {

RatFunc rv(const std::string& n) { return RatFunc::var(n); }

Rat omega_coeff(const SuperAlgebra& g, const std::string& x, const std::string& y) {
  for (auto& t : g.casimir_two_tensor())
    if (t.i == g.basis_index(x) && t.j == g.basis_index(y)) return t.c;
  return Rat(0);
}

// Action of x on a tensor product module, with the Koszul sign on the second slot.
Mat coproduct_action(const Representation& v, const Representation& w, int x) {
  int dv = v.dim, dw = w.dim;
  Mat out = mat_zero(dv * dw, dv * dw);
  int px = v.alg->parity[x];
  for (int kp = 0; kp < dv; ++kp)
    for (int k = 0; k < dv; ++k) {
      if (v.action[x][kp][k].is_zero()) continue;
      for (int l = 0; l < dw; ++l)
        out[kp * dw + l][k * dw + l] = out[kp * dw + l][k * dw + l] + v.action[x][kp][k];
    }
  for (int k = 0; k < dv; ++k) {
    Rat sign = (px * v.parity[k]) % 2 ? Rat(-1) : Rat(1);
    for (int lp = 0; lp < dw; ++lp)
      for (int l = 0; l < dw; ++l) {
        if (w.action[x][lp][l].is_zero()) continue;
        out[k * dw + lp][k * dw + l] =
            out[k * dw + lp][k * dw + l] + w.action[x][lp][l] * RatFunc::from_rat(sign);
      }
  }
  return out;
}

}  // namespace

TEST_SUITE("superalg") {

TEST_CASE("bundled data validates") {
  for (std::string id : {"gl11", "sl2"}) {
    const SuperAlgebra& g = SuperAlgebra::bundled(id);
    CHECK(g.id == id);
    ValidationReport r = g.validate();
    INFO(r.to_string());
    CHECK(r.ok());
    CHECK(g.check_super_jacobi().ok());
  }
  CHECK(SuperAlgebra::bundled("gl11").rank == 1);
  CHECK(SuperAlgebra::bundled("gl11").odd_positive_roots == 1);
  CHECK(SuperAlgebra::bundled("sl2").odd_positive_roots == 0);
}

TEST_CASE("perturbed structure constant is caught at a named triple") {
  SuperAlgebra g = SuperAlgebra::bundled("gl11");
  g.bracket[g.basis_index("e")][g.basis_index("f")][g.basis_index("b")] = 2;
  ValidationReport r = g.check_super_jacobi();
  CHECK(!r.ok());
  bool named = false;
  for (auto& i : r.issues)
    if (i.where.find("jacobi(") == 0 && i.where.find('e') != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("casimir 2-tensor comes from the inverse form") {
  const SuperAlgebra& gl = SuperAlgebra::bundled("gl11");
  CHECK(omega_coeff(gl, "a", "a") == 1);
  CHECK(omega_coeff(gl, "b", "b") == -1);
  CHECK(omega_coeff(gl, "e", "f") == -1);
  CHECK(omega_coeff(gl, "f", "e") == 1);
  CHECK(omega_coeff(gl, "a", "b") == 0);
  CHECK(gl.casimir_two_tensor().size() == 4);

  const SuperAlgebra& sl = SuperAlgebra::bundled("sl2");
  CHECK(omega_coeff(sl, "h", "h") == Rat(1) / 2);
  CHECK(omega_coeff(sl, "e", "f") == 1);
  CHECK(omega_coeff(sl, "f", "e") == 1);
  CHECK(sl.casimir_two_tensor().size() == 3);

  SuperAlgebra broken = sl;
  for (auto& row : broken.form)
    for (auto& x : row) x = 0;
  CHECK_THROWS_AS(broken.casimir_two_tensor(), Error);
}

TEST_CASE("gl11 modules") {
  const SuperAlgebra& g = SuperAlgebra::bundled("gl11");
  Representation v = g.representation("a");
  CHECK(v.dim == 2);
  CHECK(v.parity == std::vector<int>{0, 1});
  CHECK(v.super_dimension() == 0);
  CHECK(v.typical);
  CHECK(g.is_typical("a"));
  CHECK(!g.is_typical("0"));
  CHECK(g.is_typical("3"));
  CHECK(g.is_typical("-1/2"));
  RatFunc al = rv("a");
  CHECK(v.casimir_scalar() == -RatFunc::from_int(4) * al * al - RatFunc::from_int(2) * al);
}

TEST_CASE("sl2 modules") {
  const SuperAlgebra& g = SuperAlgebra::bundled("sl2");
  Representation v1 = g.representation("1");
  CHECK(v1.dim == 2);
  CHECK(v1.action[g.basis_index("h")][0][0] == RatFunc::from_int(1));
  CHECK(v1.action[g.basis_index("h")][1][1] == RatFunc::from_int(-1));
  CHECK(v1.typical);
  CHECK(v1.casimir_scalar() == RatFunc::from_rat(Rat(3) / 2));
  CHECK(g.representation("2").casimir_scalar() == RatFunc::from_int(4));
  CHECK(g.representation("3").casimir_scalar() == RatFunc::from_rat(Rat(15) / 2));
  CHECK(g.representation("4").casimir_scalar() == RatFunc::from_int(12));
  CHECK_THROWS_AS(g.representation("7"), Error);
}

TEST_CASE("omega action on a gl11 tensor square") {
  const SuperAlgebra& g = SuperAlgebra::bundled("gl11");
  Representation va = g.representation("a");
  Representation vb = g.representation("b");
  Mat om = va.omega_action(vb);
  RatFunc al = rv("a"), be = rv("b");
  RatFunc m4ab = -RatFunc::from_int(4) * al * be;
  CHECK(om[0][0] == m4ab);
  CHECK(om[1][1] == m4ab - RatFunc::from_int(2) * al);
  CHECK(om[2][2] == m4ab - RatFunc::from_int(2) * be);
  CHECK(om[3][3] == m4ab - RatFunc::from_int(2) * al - RatFunc::from_int(2) * be);
  CHECK(om[1][2] == RatFunc::from_int(2) * al);
  CHECK(om[2][1] == RatFunc::from_int(2) * be);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && !(i == 1 && j == 2) && !(i == 2 && j == 1)) CHECK(om[i][j].is_zero());

  std::vector<int> tensor_parity;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) tensor_parity.push_back((va.parity[k] + vb.parity[l]) % 2);
  CHECK(mat_supertrace(om, tensor_parity).is_zero());
}

TEST_CASE("omega commutes with the coproduct action") {
  const SuperAlgebra& gl = SuperAlgebra::bundled("gl11");
  Representation va = gl.representation("a");
  Representation vb = gl.representation("b");
  Mat om = va.omega_action(vb);
  for (size_t x = 0; x < gl.basis.size(); ++x) {
    Mat d = coproduct_action(va, vb, static_cast<int>(x));
    CHECK(mat_is_zero(mat_sub(mat_mul(d, om), mat_mul(om, d))));
  }
  const SuperAlgebra& sl = SuperAlgebra::bundled("sl2");
  Representation v1 = sl.representation("1");
  Representation v2 = sl.representation("2");
  Mat om2 = v1.omega_action(v2);
  for (size_t x = 0; x < sl.basis.size(); ++x) {
    Mat d = coproduct_action(v1, v2, static_cast<int>(x));
    CHECK(mat_is_zero(mat_sub(mat_mul(d, om2), mat_mul(om2, d))));
  }
}

TEST_CASE("broken representation data is reported") {
  SuperAlgebra g = SuperAlgebra::bundled("gl11");
  g.reps[0].action[g.basis_index("e")][0][0] = RatFunc::from_int(1);
  ValidationReport r = g.validate();
  CHECK(!r.ok());
}

}
