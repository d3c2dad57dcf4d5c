#pragma once

#include <string>
#include <vector>

#include "relink/ratfunc.hpp"

namespace relink {

using Mat = std::vector<std::vector<RatFunc>>;

Mat mat_zero(int rows, int cols);
Mat mat_identity(int n);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const RatFunc& c);
bool mat_is_zero(const Mat& a);
bool mat_equal(const Mat& a, const Mat& b);
// Trace twisted by parity: sum of (-1)^{parity[k]} a[k][k].
RatFunc mat_supertrace(const Mat& a, const std::vector<int>& parity);

std::vector<std::vector<Rat>> rat_mat_inverse(const std::vector<std::vector<Rat>>& m);

// One term of the invariant 2-tensor: c * (basis i) tensor (basis j).
struct OmegaTerm {
  int i, j;
  Rat c;
};

struct ValidationIssue {
  std::string where;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  void add(const std::string& where, const std::string& detail) { issues.push_back({where, detail}); }
  std::string to_string() const;
};

// Raw representation block from a plugin file.  Either a family with one
// symbolic parameter slot or a discrete labeled module.
struct RepFamily {
  bool parametric = false;
  std::string param;
  std::string label;
  int dim = 0;
  std::vector<int> parity;
  std::vector<Mat> action;  // indexed like the algebra basis
  RatFunc typical_when;     // typical iff this is nonzero after substitution
};

class SuperAlgebra;

// Instantiated module: family parameter replaced by a color symbol or number.
struct Representation {
  const SuperAlgebra* alg = nullptr;
  std::string label;
  int dim = 0;
  std::vector<int> parity;
  std::vector<Mat> action;
  RatFunc typicality_value;
  bool typical = false;

  int super_dimension() const;
  // Action of Omega on this module tensor another, with Koszul signs.
  // Index convention: (k, l) -> k * other.dim + l.
  Mat omega_action(const Representation& other) const;
  // Scalar by which a single chord on one strand acts, i.e. m(rho x rho)(Omega)
  // divided by the identity; requires the action to be scalar.
  RatFunc casimir_scalar() const;
};

class SuperAlgebra {
 public:
  std::string id;
  int rank = 0;
  int odd_positive_roots = 0;
  std::vector<std::string> basis;
  std::vector<int> parity;
  // bracket[i][j] = coefficient vector of [x_i, x_j] over the basis
  std::vector<std::vector<std::vector<Rat>>> bracket;
  std::vector<std::vector<Rat>> form;
  std::vector<RepFamily> reps;

  static SuperAlgebra load(const std::string& path);
  static const SuperAlgebra& bundled(const std::string& id);

  int basis_index(const std::string& name) const;

  ValidationReport check_super_jacobi() const;
  ValidationReport validate() const;

  std::vector<OmegaTerm> casimir_two_tensor() const;

  Representation representation(const std::string& label) const;
  bool is_typical(const std::string& label) const;
};

}  // namespace relink
