#pragma once

#include <string>
#include <vector>

#include "relink/poly.hpp"
#include "relink/series.hpp"

namespace relink {

// Square matrix over truncated series, row-major.
struct SerMat {
  int rows = 0;
  int cols = 0;
  std::vector<Series> a;

  Series& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Series& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
  static SerMat zero(int r, int c) { return {r, c, std::vector<Series>(static_cast<size_t>(r) * c)}; }
  static SerMat identity(int n);
};

SerMat sermat_mul(const SerMat& x, const SerMat& y);
bool sermat_equal(const SerMat& x, const SerMat& y);

// A module instantiated at one concrete color.
struct RibbonModule {
  std::string label;
  Poly color;
  int dim = 0;
  std::vector<int> parity;
  Series theta;
  std::vector<Series> cap_pivot;  // values of the pivot evaluation, consumes (+,-)
  std::vector<Series> cup_pivot;  // values of the pivot coevaluation, creates (-,+)
  bool typical = false;
};

// Pluggable ribbon data for one algebra: a one-parameter module family with
// braiding, twist, duality pivots and the modified dimension. Entries are
// stored as series templates in the formal parameters and instantiated by
// substitution. Load once per truncation order; nothing here is validated
// beyond shape, the axiom checks live in the quantum module.
class RibbonDatum {
 public:
  static RibbonDatum load(const std::string& path);
  static RibbonDatum bundled(const std::string& id);

  const std::string& algebra() const { return algebra_; }
  int dim() const { return dim_; }
  const std::vector<int>& parity() const { return parity_; }
  bool parametric() const { return !param_.empty(); }

  RibbonModule module(const Poly& color, const std::string& label) const;
  bool is_typical(const Poly& color) const;

  // Braiding matrix on V(x) (x) V(y) and its inverse; both map the tensor
  // square to itself, the crossing tile composes them with the super flip.
  SerMat braid(const Poly& x, const Poly& y) const;
  SerMat braid_inverse(const Poly& x, const Poly& y) const;

  // Modified dimension: raw series rescaled by h^{odd_root_shift} and the
  // normalization constant. Throws a typicality error on atypical colors.
  Series modified_dim(const Poly& color) const;
  RatFunc d_zero(const Poly& color) const;
  int odd_root_shift() const { return d_shift_; }
  const Rat& normalization() const { return d_norm_; }
  void set_normalization(const Rat& c);

  // Raw h^1 coefficient of braid(x, y) (used by the semiclassical check).
  // Exposed so validators need not re-instantiate templates.
  const std::string& param() const { return param_; }
  const std::string& second_param() const { return param2_; }

 private:
  std::string algebra_;
  std::string param_;   // first formal color slot ("" for label-style data)
  std::string param2_;  // second formal color slot
  int dim_ = 0;
  std::vector<int> parity_;
  Series theta_t_;
  std::vector<Series> cap_t_, cup_t_;
  RatFunc typical_t_;
  Series d_raw_t_;
  int d_shift_ = 0;
  Rat d_norm_ = 1;
  SerMat r_t_, rinv_t_;
  int loaded_trunc_ = 0;

  std::map<int, Poly> env1(const Poly& x) const;
  std::map<int, Poly> env2(const Poly& x, const Poly& y) const;
  void check_trunc() const;
};

}  // namespace relink
