#include "relink/ribbon.hpp"

#include "relink/error.hpp"
#include "relink/expr.hpp"
#include "textio.hpp"

namespace relink {

SerMat SerMat::identity(int n) {
  SerMat m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Series::from_int(1);
  return m;
}

SerMat sermat_mul(const SerMat& x, const SerMat& y) {
  if (x.cols != y.rows) throw internal_error("sermat_mul: shape mismatch");
  SerMat out = SerMat::zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + x.at(i, k) * y.at(k, j);
      }
    }
  return out;
}

bool sermat_equal(const SerMat& x, const SerMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] != y.a[i]) return false;
  return true;
}

namespace {

std::vector<Series> read_series_list(const std::string& text, LineReader& in) {
  std::vector<Series> out;
  for (const std::string& cell : split_on(text, ',')) {
    if (cell.empty()) in.fail("empty entry in series list");
    out.push_back(parse_series_expr(cell));
  }
  return out;
}

SerMat read_series_block(LineReader& in, int n) {
  SerMat m = SerMat::zero(n, n);
  int row = 0;
  std::string line;
  while (in.next(line)) {
    if (line == "end") {
      if (row != n) in.fail("expected " + std::to_string(n) + " matrix rows");
      return m;
    }
    if (row >= n) in.fail("too many matrix rows");
    std::vector<Series> cells = read_series_list(line, in);
    if (static_cast<int>(cells.size()) != n)
      in.fail("expected " + std::to_string(n) + " entries per row");
    for (int j = 0; j < n; ++j) m.at(row, j) = cells[j];
    ++row;
  }
  in.fail("unterminated matrix block");
}

}  // namespace

RibbonDatum RibbonDatum::load(const std::string& path) {
  LineReader in = LineReader::from_file(path);
  RibbonDatum rd;
  rd.loaded_trunc_ = series_trunc_order();

  bool saw_module = false;
  std::string line;
  while (in.next(line)) {
    std::vector<std::string> w = split_ws(line);
    const std::string& key = w[0];
    if (key == "ribbon") {
      if (w.size() != 2) in.fail("ribbon needs one id");
    } else if (key == "algebra") {
      if (w.size() != 2) in.fail("algebra needs one id");
      rd.algebra_ = w[1];
    } else if (key == "params") {
      if (w.size() != 3) in.fail("params needs two formal color names");
      rd.param_ = w[1];
      rd.param2_ = w[2];
    } else if (key == "module") {
      saw_module = true;
      std::string l2;
      while (in.next(l2)) {
        if (l2 == "end") break;
        std::vector<std::string> v = split_ws(l2);
        const std::string& k2 = v[0];
        std::string rest = strip(l2.substr(k2.size()));
        if (k2 == "dim") {
          rd.dim_ = std::stoi(v.at(1));
        } else if (k2 == "parity") {
          rd.parity_.clear();
          for (size_t i = 1; i < v.size(); ++i)
            rd.parity_.push_back(std::stoi(v[i]) % 2);
        } else if (k2 == "theta") {
          rd.theta_t_ = parse_series_expr(rest);
        } else if (k2 == "cap_pivot") {
          rd.cap_t_ = read_series_list(rest, in);
        } else if (k2 == "cup_pivot") {
          rd.cup_t_ = read_series_list(rest, in);
        } else if (k2 == "typical_when") {
          rd.typical_t_ = parse_ratfunc_expr(rest);
        } else if (k2 == "dmod_raw") {
          rd.d_raw_t_ = parse_series_expr(rest);
        } else if (k2 == "dmod_shift") {
          rd.d_shift_ = std::stoi(v.at(1));
        } else if (k2 == "dmod_norm") {
          rd.d_norm_ = parse_ratfunc_expr(rest).rat_value();
        } else {
          in.fail("unknown module key \"" + k2 + "\"");
        }
      }
    } else if (key == "rmatrix") {
      if (rd.dim_ == 0) in.fail("rmatrix before module dim");
      rd.r_t_ = read_series_block(in, rd.dim_ * rd.dim_);
    } else if (key == "rmatrix_inverse") {
      if (rd.dim_ == 0) in.fail("rmatrix_inverse before module dim");
      rd.rinv_t_ = read_series_block(in, rd.dim_ * rd.dim_);
    } else {
      in.fail("unknown key \"" + key + "\"");
    }
  }

  if (rd.algebra_.empty()) in.fail("missing algebra id");
  if (!saw_module) in.fail("missing module block");
  if (rd.dim_ <= 0) in.fail("module dim must be positive");
  if (static_cast<int>(rd.parity_.size()) != rd.dim_)
    in.fail("parity list does not match dim");
  if (static_cast<int>(rd.cap_t_.size()) != rd.dim_ ||
      static_cast<int>(rd.cup_t_.size()) != rd.dim_)
    in.fail("pivot lists do not match dim");
  if (rd.r_t_.rows == 0 || rd.rinv_t_.rows == 0)
    in.fail("missing rmatrix or rmatrix_inverse block");
  return rd;
}

RibbonDatum RibbonDatum::bundled(const std::string& id) {
  return load(std::string(RELINK_DATA_DIR) + "/" + id + ".ribbon");
}

void RibbonDatum::check_trunc() const {
  if (loaded_trunc_ != series_trunc_order())
    throw config_error(
        "ribbon datum for " + algebra_ + " was loaded at truncation order " +
        std::to_string(loaded_trunc_) + " but the current order is " +
        std::to_string(series_trunc_order()) + "; reload the datum");
}

std::map<int, Poly> RibbonDatum::env1(const Poly& x) const {
  std::map<int, Poly> env;
  if (parametric()) env[intern_symbol(param_)] = x;
  return env;
}

std::map<int, Poly> RibbonDatum::env2(const Poly& x, const Poly& y) const {
  std::map<int, Poly> env;
  if (parametric()) {
    env[intern_symbol(param_)] = x;
    env[intern_symbol(param2_)] = y;
  }
  return env;
}

bool RibbonDatum::is_typical(const Poly& color) const {
  RatFunc t = typical_t_.substitute({{intern_symbol(param_.empty() ? "_" : param_),
                                      color}});
  return !t.is_zero();
}

RibbonModule RibbonDatum::module(const Poly& color,
                                 const std::string& label) const {
  check_trunc();
  if (!parametric() && !(color == Poly::from_int(1)))
    throw config_error("algebra " + algebra_ +
                       " bundles a single module; use color label 1");
  RibbonModule m;
  m.label = label;
  m.color = color;
  m.dim = dim_;
  m.parity = parity_;
  std::map<int, Poly> env = env1(color);
  m.theta = theta_t_.substitute(env);
  for (const Series& s : cap_t_) m.cap_pivot.push_back(s.substitute(env));
  for (const Series& s : cup_t_) m.cup_pivot.push_back(s.substitute(env));
  m.typical = is_typical(color);
  return m;
}

SerMat RibbonDatum::braid(const Poly& x, const Poly& y) const {
  check_trunc();
  SerMat out = r_t_;
  std::map<int, Poly> env = env2(x, y);
  for (Series& s : out.a) s = s.substitute(env);
  return out;
}

SerMat RibbonDatum::braid_inverse(const Poly& x, const Poly& y) const {
  check_trunc();
  SerMat out = rinv_t_;
  std::map<int, Poly> env = env2(x, y);
  for (Series& s : out.a) s = s.substitute(env);
  return out;
}

Series RibbonDatum::modified_dim(const Poly& color) const {
  check_trunc();
  if (!is_typical(color))
    throw typicality_error("modified dimension undefined at atypical color " +
                           color.to_string());
  Series d = d_raw_t_.substitute(env1(color)).shift(d_shift_);
  if (d.low_order() < 0)
    throw validation_error(
        "modified dimension still has a pole after rescaling by h^" +
        std::to_string(d_shift_));
  return d.mul_ratfunc(RatFunc::from_rat(d_norm_));
}

RatFunc RibbonDatum::d_zero(const Poly& color) const {
  RatFunc c = modified_dim(color).coefficient(0);
  if (c.is_zero())
    throw validation_error("d_0 vanishes at typical color " +
                           color.to_string());
  return c;
}

void RibbonDatum::set_normalization(const Rat& c) {
  if (c == 0) throw config_error("normalization constant must be nonzero");
  d_norm_ = c;
}

}  // namespace relink
