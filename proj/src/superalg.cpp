#include "relink/superalg.hpp"

#include <map>
#include <sstream>

#include "relink/error.hpp"
#include "relink/expr.hpp"
#include "textio.hpp"

namespace relink {

Mat mat_zero(int rows, int cols) {
  return Mat(rows, std::vector<RatFunc>(cols));
}

Mat mat_identity(int n) {
  Mat m = mat_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = RatFunc::from_int(1);
  return m;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] + b[i][j];
  return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  Mat out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] - b[i][j];
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty()) return {};
  size_t n = a.size(), k = b.size(), m = b[0].size();
  Mat out = mat_zero(n, m);
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) {
        if (b[t][j].is_zero()) continue;
        out[i][j] = out[i][j] + a[i][t] * b[t][j];
      }
    }
  return out;
}

Mat mat_scale(const Mat& a, const RatFunc& c) {
  Mat out = a;
  for (auto& row : out)
    for (auto& x : row) x = x * c;
  return out;
}

bool mat_is_zero(const Mat& a) {
  for (auto& row : a)
    for (auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool mat_equal(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

RatFunc mat_supertrace(const Mat& a, const std::vector<int>& parity) {
  RatFunc out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (parity[i] % 2)
      out = out - a[i][i];
    else
      out = out + a[i][i];
  }
  return out;
}

std::vector<std::vector<Rat>> rat_mat_inverse(const std::vector<std::vector<Rat>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a = m;
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw validation_error("form matrix is degenerate");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    Rat d = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::string out;
  for (auto& i : issues) out += i.where + ": " + i.detail + "\n";
  return out;
}

namespace {

Rat parse_rat_token(const std::string& s, LineReader& in) {
  try {
    return parse_ratfunc_expr(s).rat_value();
  } catch (const Error&) {
    in.fail("expected rational number, got \"" + s + "\"");
  }
}

// Linear combination of basis names: "e", "- f", "a + b", "2*e", "-1/2*a".
std::vector<Rat> parse_basis_combo(const std::string& text, const SuperAlgebra& g, LineReader& in) {
  std::vector<Rat> out(g.basis.size(), Rat(0));
  size_t p = 0;
  auto skip = [&] { while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p; };
  bool first = true;
  while (true) {
    skip();
    if (p == text.size()) {
      if (first) in.fail("empty bracket value");
      return out;
    }
    Rat sign(1);
    if (text[p] == '+' || text[p] == '-') {
      if (text[p] == '-') sign = -1;
      ++p;
    } else if (!first) {
      in.fail("expected + or - in \"" + text + "\"");
    }
    skip();
    Rat coeff(1);
    if (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      size_t start = p;
      while (p < text.size() && (std::isdigit(static_cast<unsigned char>(text[p])) || text[p] == '/'))
        ++p;
      coeff = Rat(text.substr(start, p - start));
      coeff.canonicalize();
      skip();
      if (p < text.size() && text[p] == '*') {
        ++p;
        skip();
      }
    }
    size_t start = p;
    while (p < text.size() && (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_'))
      ++p;
    if (p == start) in.fail("expected basis name in \"" + text + "\"");
    std::string name = text.substr(start, p - start);
    out[g.basis_index(name)] += sign * coeff;
    first = false;
  }
}

Mat read_matrix_block(LineReader& in, int rows, int cols) {
  Mat m;
  std::string line;
  while (in.next(line)) {
    if (line == "end") {
      if (static_cast<int>(m.size()) != rows) in.fail("expected " + std::to_string(rows) + " matrix rows");
      return m;
    }
    std::vector<std::string> cells = split_on(line, ',');
    if (static_cast<int>(cells.size()) != cols) in.fail("expected " + std::to_string(cols) + " entries per row");
    std::vector<RatFunc> row;
    for (auto& c : cells) row.push_back(parse_ratfunc_expr(c));
    m.push_back(row);
  }
  in.fail("unterminated matrix block");
}

}  // namespace

int SuperAlgebra::basis_index(const std::string& name) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == name) return static_cast<int>(i);
  throw parse_error("unknown basis element \"" + name + "\" in algebra " + id);
}

SuperAlgebra SuperAlgebra::load(const std::string& path) {
  LineReader in = LineReader::from_file(path);

  SuperAlgebra g;
  std::string line;
  while (in.next(line)) {
    std::vector<std::string> w = split_ws(line);
    const std::string& key = w[0];
    if (key == "algebra") {
      if (w.size() != 2) in.fail("algebra needs one name");
      g.id = w[1];
    } else if (key == "rank") {
      g.rank = std::stoi(w.at(1));
    } else if (key == "odd_positive_roots") {
      g.odd_positive_roots = std::stoi(w.at(1));
    } else if (key == "basis") {
      if (w.size() != 3) in.fail("basis needs name and parity");
      g.basis.push_back(w[1]);
      g.parity.push_back(std::stoi(w[2]));
    } else if (key == "bracket") {
      if (g.bracket.empty())
        g.bracket.assign(g.basis.size(),
                         std::vector<std::vector<Rat>>(g.basis.size(),
                                                       std::vector<Rat>(g.basis.size(), Rat(0))));
      if (w.size() < 4 || w[3] != "=") in.fail("bracket syntax: bracket x y = combo");
      int i = g.basis_index(w[1]);
      int j = g.basis_index(w[2]);
      size_t eq = line.find('=');
      g.bracket[i][j] = parse_basis_combo(strip(line.substr(eq + 1)), g, in);
    } else if (key == "form") {
      int n = static_cast<int>(g.basis.size());
      Mat m = read_matrix_block(in, n, n);
      g.form.assign(n, std::vector<Rat>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (!m[i][j].is_rat()) in.fail("form entries must be rational");
          g.form[i][j] = m[i][j].rat_value();
        }
    } else if (key == "rep") {
      if (w.size() != 3 || (w[1] != "family" && w[1] != "label")) in.fail("rep syntax: rep family <param> | rep label <name>");
      RepFamily r;
      r.parametric = (w[1] == "family");
      if (r.parametric)
        r.param = w[2];
      else
        r.label = w[2];
      r.action.assign(g.basis.size(), Mat());
      r.typical_when = RatFunc::from_int(1);
      std::string sub;
      while (in.next(sub)) {
        if (sub == "end") break;
        std::vector<std::string> sw = split_ws(sub);
        if (sw[0] == "dim") {
          r.dim = std::stoi(sw.at(1));
        } else if (sw[0] == "parity") {
          for (size_t k = 1; k < sw.size(); ++k) r.parity.push_back(std::stoi(sw[k]));
        } else if (sw[0] == "action") {
          if (r.dim <= 0 || r.parity.size() != static_cast<size_t>(r.dim))
            in.fail("dim and parity must precede action blocks");
          int b = g.basis_index(sw.at(1));
          r.action[b] = read_matrix_block(in, r.dim, r.dim);
        } else if (sw[0] == "typical_when") {
          size_t sp = sub.find(' ');
          r.typical_when = parse_ratfunc_expr(strip(sub.substr(sp + 1)));
        } else {
          in.fail("unknown rep key \"" + sw[0] + "\"");
        }
      }
      for (size_t b = 0; b < g.basis.size(); ++b)
        if (r.action[b].empty()) in.fail("rep missing action for basis element " + g.basis[b]);
      g.reps.push_back(r);
    } else {
      in.fail("unknown key \"" + key + "\"");
    }
  }
  if (g.id.empty()) throw parse_error(path + ": missing algebra name");
  if (g.basis.empty()) throw parse_error(path + ": no basis");
  if (g.bracket.empty() || g.form.empty()) throw parse_error(path + ": missing bracket or form");
  return g;
}

const SuperAlgebra& SuperAlgebra::bundled(const std::string& id) {
  static std::map<std::string, SuperAlgebra> cache;
  auto it = cache.find(id);
  if (it == cache.end()) {
    SuperAlgebra g = load(std::string(RELINK_DATA_DIR) + "/" + id + ".alg");
    if (g.id != id) throw config_error("algebra file declares id " + g.id + ", expected " + id);
    it = cache.emplace(id, std::move(g)).first;
  }
  return it->second;
}

ValidationReport SuperAlgebra::check_super_jacobi() const {
  ValidationReport rep;
  int n = static_cast<int>(basis.size());
  auto bk = [&](int i, const std::vector<Rat>& v) {
    std::vector<Rat> out(n, Rat(0));
    for (int m = 0; m < n; ++m) {
      if (v[m] == 0) continue;
      for (int k = 0; k < n; ++k) out[k] += v[m] * bracket[i][m][k];
    }
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Rat> sum(n, Rat(0));
        auto acc = [&](int x, int y, int z) {
          Rat s = (parity[x] * parity[z]) % 2 ? Rat(-1) : Rat(1);
          std::vector<Rat> t = bk(x, bracket[y][z]);
          for (int m = 0; m < n; ++m) sum[m] += s * t[m];
        };
        acc(i, j, k);
        acc(j, k, i);
        acc(k, i, j);
        for (int m = 0; m < n; ++m)
          if (sum[m] != 0) {
            rep.add("jacobi(" + basis[i] + "," + basis[j] + "," + basis[k] + ")",
                    "sum has nonzero coefficient on " + basis[m]);
            break;
          }
      }
  return rep;
}

ValidationReport SuperAlgebra::validate() const {
  ValidationReport rep;
  int n = static_cast<int>(basis.size());

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int pij = (parity[i] + parity[j]) % 2;
      for (int k = 0; k < n; ++k) {
        if (bracket[i][j][k] != 0 && parity[k] != pij)
          rep.add("grading(" + basis[i] + "," + basis[j] + ")",
                  "bracket lands on " + basis[k] + " of wrong parity");
        Rat anti = bracket[j][i][k] + ((parity[i] * parity[j]) % 2 ? Rat(-1) : Rat(1)) * bracket[i][j][k];
        if (anti != 0)
          rep.add("antisymmetry(" + basis[i] + "," + basis[j] + ")",
                  "fails on coefficient of " + basis[k]);
      }
    }

  ValidationReport jac = check_super_jacobi();
  rep.issues.insert(rep.issues.end(), jac.issues.begin(), jac.issues.end());

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (form[i][j] != 0 && parity[i] != parity[j])
        rep.add("form_even(" + basis[i] + "," + basis[j] + ")", "odd pairing is nonzero");
      Rat sym = form[j][i] - ((parity[i] * parity[j]) % 2 ? Rat(-1) : Rat(1)) * form[i][j];
      if (sym != 0) rep.add("form_supersymmetric(" + basis[i] + "," + basis[j] + ")", "fails");
      for (int k = 0; k < n; ++k) {
        Rat lhs(0), rhs(0);
        for (int m = 0; m < n; ++m) {
          lhs += bracket[i][j][m] * form[m][k];
          rhs += bracket[j][k][m] * form[i][m];
        }
        if (lhs != rhs)
          rep.add("form_invariant(" + basis[i] + "," + basis[j] + "," + basis[k] + ")", "fails");
      }
    }

  try {
    std::vector<OmegaTerm> om = casimir_two_tensor();
    for (auto& t : om) {
      Rat mirror(0);
      for (auto& u : om)
        if (u.i == t.j && u.j == t.i) mirror = u.c;
      Rat want = ((parity[t.i] * parity[t.j]) % 2 ? Rat(-1) : Rat(1)) * t.c;
      if (mirror != want)
        rep.add("omega_flip(" + basis[t.i] + "," + basis[t.j] + ")", "tensor is not super-flip symmetric");
    }
  } catch (const Error& e) {
    rep.add("omega", e.what());
  }

  for (auto& fam : reps) {
    std::string tag = "rep " + (fam.parametric ? fam.param : fam.label);
    for (int b = 0; b < n; ++b) {
      const Mat& m = fam.action[b];
      for (int r = 0; r < fam.dim; ++r)
        for (int c = 0; c < fam.dim; ++c)
          if (!m[r][c].is_zero() && (fam.parity[r] + fam.parity[c]) % 2 != parity[b])
            rep.add(tag, "action of " + basis[b] + " is not parity-homogeneous at (" +
                             std::to_string(r) + "," + std::to_string(c) + ")");
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Mat lhs = mat_zero(fam.dim, fam.dim);
        for (int m = 0; m < n; ++m)
          if (bracket[i][j][m] != 0)
            lhs = mat_add(lhs, mat_scale(fam.action[m], RatFunc::from_rat(bracket[i][j][m])));
        Mat rhs = mat_sub(mat_mul(fam.action[i], fam.action[j]),
                          mat_scale(mat_mul(fam.action[j], fam.action[i]),
                                    RatFunc::from_rat((parity[i] * parity[j]) % 2 ? Rat(-1) : Rat(1))));
        if (!mat_equal(lhs, rhs))
          rep.add(tag, "homomorphism identity fails on (" + basis[i] + "," + basis[j] + ")");
      }
  }
  return rep;
}

std::vector<OmegaTerm> SuperAlgebra::casimir_two_tensor() const {
  std::vector<std::vector<Rat>> inv = rat_mat_inverse(form);
  std::vector<OmegaTerm> out;
  int n = static_cast<int>(basis.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (inv[i][j] != 0) out.push_back({i, j, inv[i][j]});
  return out;
}

Representation SuperAlgebra::representation(const std::string& label) const {
  if (label.empty()) throw config_error("empty module label");
  for (auto& r : reps) {
    if (r.parametric || r.label != label) continue;
    Representation out;
    out.alg = this;
    out.label = label;
    out.dim = r.dim;
    out.parity = r.parity;
    out.action = r.action;
    out.typicality_value = r.typical_when;
    out.typical = !out.typicality_value.is_zero();
    return out;
  }
  const RepFamily* fam = nullptr;
  for (auto& r : reps)
    if (r.parametric) {
      fam = &r;
      break;
    }
  if (!fam) throw config_error("algebra " + id + " has no module labeled " + label);
  bool numeric = label.find_first_not_of("-0123456789/") == std::string::npos;

  std::map<int, Poly> env;
  if (numeric) {
    Rat v(label);
    v.canonicalize();
    env[intern_symbol(fam->param)] = Poly::from_rat(v);
  } else {
    env[intern_symbol(fam->param)] = Poly::var(label);
  }
  Representation out;
  out.alg = this;
  out.label = label;
  out.dim = fam->dim;
  out.parity = fam->parity;
  out.action.reserve(basis.size());
  for (auto& m : fam->action) {
    Mat sub = m;
    for (auto& row : sub)
      for (auto& x : row) x = x.substitute(env);
    out.action.push_back(sub);
  }
  out.typicality_value = fam->typical_when.substitute(env);
  out.typical = !out.typicality_value.is_zero();
  return out;
}

bool SuperAlgebra::is_typical(const std::string& label) const {
  return representation(label).typical;
}

int Representation::super_dimension() const {
  int d = 0;
  for (int p : parity) d += p % 2 ? -1 : 1;
  return d;
}

Mat Representation::omega_action(const Representation& other) const {
  std::vector<OmegaTerm> terms = alg->casimir_two_tensor();
  int dv = dim, dw = other.dim;
  Mat out = mat_zero(dv * dw, dv * dw);
  for (auto& t : terms) {
    const Mat& A = action[t.i];
    const Mat& B = other.action[t.j];
    int pj = alg->parity[t.j];
    for (int kp = 0; kp < dv; ++kp)
      for (int k = 0; k < dv; ++k) {
        if (A[kp][k].is_zero()) continue;
        Rat sign = (pj * parity[k]) % 2 ? Rat(-1) : Rat(1);
        RatFunc left = A[kp][k] * RatFunc::from_rat(sign * t.c);
        for (int lp = 0; lp < dw; ++lp)
          for (int l = 0; l < dw; ++l) {
            if (B[lp][l].is_zero()) continue;
            out[kp * dw + lp][k * dw + l] = out[kp * dw + lp][k * dw + l] + left * B[lp][l];
          }
      }
  }
  return out;
}

RatFunc Representation::casimir_scalar() const {
  std::vector<OmegaTerm> terms = alg->casimir_two_tensor();
  Mat c = mat_zero(dim, dim);
  for (auto& t : terms)
    c = mat_add(c, mat_scale(mat_mul(action[t.i], action[t.j]), RatFunc::from_rat(t.c)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (i != j ? !c[i][j].is_zero() : c[i][j] != c[0][0])
        throw internal_error("Casimir does not act as a scalar on module " + label);
  return c[0][0];
}

}  // namespace relink
