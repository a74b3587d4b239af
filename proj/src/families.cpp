#include "wsuper/families.hpp"

#include "wsuper/linalg.hpp"
#include "wsuper/table_io.hpp"

namespace wsuper {

namespace {

int block_parity(int i, int m) { return i < m ? 0 : 1; }

Vec flatten(const Mat& x) {
  Vec v(x.size());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) v(i * x.cols() + j) = x(i, j);
  return v;
}

std::string index_label(int i) { return std::to_string(i + 1); }

std::string gl_label(int i, int j) { return "E[" + index_label(i) + "," + index_label(j) + "]"; }

// psl22 follows the barred/unbarred naming of the two 2x2 blocks: 1b,2b are the even block.
std::string psl_index(int i) { return i < 2 ? std::to_string(i + 1) + "b" : std::to_string(i - 1); }

void check_params(const AlgebraSpec& spec) {
  switch (spec.family) {
    case Family::gl:
      if (spec.m < 0 || spec.n < 0 || spec.m + spec.n == 0) throw InputError("gl(m|n) needs m,n >= 0 and m+n > 0");
      break;
    case Family::sl:
      if (spec.m < 0 || spec.n < 0 || spec.m + spec.n < 2) throw InputError("sl(m|n) needs m+n >= 2");
      if (spec.m == spec.n) throw InputError("sl(m|n) requires m != n; use psl22 for sl(2|2)/CI");
      break;
    case Family::psl22:
      break;
    case Family::osp:
      if (spec.m < 1) throw InputError("osp(m|n) needs m >= 1");
      if (spec.n < 2 || spec.n % 2 != 0) throw InputError("osp(m|n) needs n even and positive");
      break;
    case Family::imported:
      break;
  }
}

// Matrix of the even supersymmetric form preserved by osp(m|n): split symmetric on the even block,
// split skew on the odd block.
Mat osp_form(int m, int n) {
  Mat b = Mat::Zero(m + n, m + n);
  for (int i = 0; i < m; ++i) b(i, m - 1 - i) = 1;
  for (int i = 0; i < n; ++i) b(m + i, m + n - 1 - i) = (i < n / 2) ? 1 : -1;
  return b;
}

MatrixRealization osp_realization(int m, int n) {
  const int size = m + n;
  const Mat b = osp_form(m, n);
  MatrixRealization out{m, n, {}, {}, {}};
  for (int xpar = 0; xpar < 2; ++xpar) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        if (((block_parity(i, m) + block_parity(j, m)) & 1) == xpar) cells.emplace_back(i, j);
    // (X^T B)_{ab} + (-1)^{|X| p(a)} (B X)_{ab} = 0
    Mat eqs = Mat::Zero(size * size, static_cast<Eigen::Index>(cells.size()));
    for (size_t c = 0; c < cells.size(); ++c) {
      const Mat x = elementary(size, cells[c].first, cells[c].second);
      const Mat lhs = x.transpose() * b;
      const Mat rhs = b * x;
      for (int a = 0; a < size; ++a)
        for (int bb = 0; bb < size; ++bb)
          eqs(a * size + bb, static_cast<Eigen::Index>(c)) =
              lhs(a, bb) + sign(xpar * block_parity(a, m)) * rhs(a, bb);
    }
    const Mat kernel = column_span(nullspace(eqs));
    for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
      Mat x = Mat::Zero(size, size);
      int first = -1;
      for (size_t c = 0; c < cells.size(); ++c) {
        const Scalar& v = kernel(static_cast<Eigen::Index>(c), k);
        if (v.is_zero()) continue;
        if (first < 0) first = static_cast<int>(c);
        x(cells[c].first, cells[c].second) = v;
      }
      out.basis.push_back(x);
      out.labels.push_back("X[" + index_label(cells[static_cast<size_t>(first)].first) + "," +
                           index_label(cells[static_cast<size_t>(first)].second) + "]");
    }
  }
  return out;
}

}  // namespace

Family parse_family(const std::string& s) {
  if (s == "gl") return Family::gl;
  if (s == "sl") return Family::sl;
  if (s == "psl22") return Family::psl22;
  if (s == "osp") return Family::osp;
  throw InputError("unknown family '" + s + "' (expected gl, sl, psl22, osp)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::psl22: return "psl22";
    case Family::osp: return "osp";
    case Family::imported: return "imported";
  }
  return "?";
}

std::string spec_label(const AlgebraSpec& spec) {
  switch (spec.family) {
    case Family::psl22: return "psl(2|2)";
    case Family::imported: return "imported";
    default: return family_name(spec.family) + "(" + std::to_string(spec.m) + "|" + std::to_string(spec.n) + ")";
  }
}

Mat elementary(int size, int i, int j) {
  Mat x = Mat::Zero(size, size);
  x(i, j) = 1;
  return x;
}

std::optional<int> matrix_parity(const Mat& x, int m) {
  std::optional<int> p;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (x(i, j).is_zero()) continue;
      const int q = (block_parity(static_cast<int>(i), m) + block_parity(static_cast<int>(j), m)) & 1;
      if (p && *p != q) return std::nullopt;
      p = q;
    }
  return p;
}

Mat matrix_bracket(const Mat& x, const Mat& y, int m) {
  const auto px = matrix_parity(x, m), py = matrix_parity(y, m);
  if (!px || !py) return Mat::Zero(x.rows(), x.cols());
  return x * y - sign(*px * *py) * (y * x);
}

Scalar supertrace(const Mat& x, int m) {
  Scalar s = 0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) s += sign(block_parity(static_cast<int>(i), m)) * x(i, i);
  return s;
}

Vec MatrixRealization::coordinates(const Mat& x) const {
  const int size = m + n;
  std::vector<Vec> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  for (const auto& k : kernel) cols.push_back(flatten(k));
  const Mat a = hstack(cols, size * size);
  const Vec target = flatten(x);
  auto c = solve(a, target);
  if (!c || a * *c != target) throw InputError("matrix is not in the span of the realization basis");
  return c->head(static_cast<Eigen::Index>(basis.size()));
}

MatrixRealization matrix_realization(const AlgebraSpec& spec) {
  check_params(spec);
  MatrixRealization out;
  switch (spec.family) {
    case Family::gl: {
      out.m = spec.m;
      out.n = spec.n;
      const int size = spec.m + spec.n;
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          out.basis.push_back(elementary(size, i, j));
          out.labels.push_back(gl_label(i, j));
        }
      return out;
    }
    case Family::sl: {
      out.m = spec.m;
      out.n = spec.n;
      const int size = spec.m + spec.n;
      for (int k = 0; k + 1 < size; ++k) {
        const int s = (block_parity(k, spec.m) + block_parity(k + 1, spec.m)) & 1;
        out.basis.push_back(elementary(size, k, k) - sign(s) * elementary(size, k + 1, k + 1));
        out.labels.push_back("H" + std::to_string(k + 1));
      }
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
          if (i == j) continue;
          out.basis.push_back(elementary(size, i, j));
          out.labels.push_back(gl_label(i, j));
        }
      return out;
    }
    case Family::psl22: {
      out.m = 2;
      out.n = 2;
      out.basis.push_back(elementary(4, 0, 0) - elementary(4, 1, 1));
      out.labels.push_back("h");
      out.basis.push_back(elementary(4, 2, 2) - elementary(4, 3, 3));
      out.labels.push_back("H2");
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          if (i == j) continue;
          out.basis.push_back(elementary(4, i, j));
          out.labels.push_back("e[" + psl_index(i) + "," + psl_index(j) + "]");
        }
      out.kernel.push_back(Mat::Identity(4, 4));
      return out;
    }
    case Family::osp:
      return osp_realization(spec.m, spec.n);
    case Family::imported:
      throw InputError("imported algebras have no matrix realization");
  }
  return out;
}

SuperAlgebra build_algebra(const AlgebraSpec& spec) {
  if (spec.family == Family::imported) return import_table(spec.table);
  const MatrixRealization real = matrix_realization(spec);
  const int d = static_cast<int>(real.basis.size());
  const int size = real.m + real.n;

  std::vector<Vec> cols;
  for (const auto& b : real.basis) cols.push_back(flatten(b));
  for (const auto& k : real.kernel) cols.push_back(flatten(k));
  const Mat a = hstack(cols, size * size);
  // Exact left inverse; each bracket is checked to lie in the span.
  const Mat left = inverse(a.transpose() * a) * a.transpose();

  std::vector<int> par;
  for (const auto& b : real.basis) par.push_back(*matrix_parity(b, real.m));
  SuperAlgebra alg(spec_label(spec), par, real.labels);
  Mat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Mat c = matrix_bracket(real.basis[static_cast<size_t>(i)], real.basis[static_cast<size_t>(j)], real.m);
      const Vec target = flatten(c);
      const Vec coords = left * target;
      if (a * coords != target) throw AlgebraError("realization basis is not closed under the bracket");
      alg.set_bracket(i, j, to_sparse(coords.head(d)));
      g(i, j) = supertrace(real.basis[static_cast<size_t>(i)] * real.basis[static_cast<size_t>(j)], real.m);
    }
  alg.set_form(g);
  const AlgebraCheck check = check_algebra(alg);
  if (!check.ok()) throw AlgebraError("constructed algebra fails " + check.first_failure());
  return alg;
}

Vec catalog_e(const AlgebraSpec& spec) {
  if (spec.family == Family::imported) throw InputError("imported algebras need an explicit --e vector");
  const MatrixRealization real = matrix_realization(spec);
  const int size = real.m + real.n;
  switch (spec.family) {
    case Family::gl:
    case Family::sl:
      if (spec.m >= 2) return real.coordinates(elementary(size, 0, spec.m - 1));
      if (spec.n >= 2) return real.coordinates(elementary(size, spec.m, size - 1));
      throw InputError(spec_label(spec) + " has no nonzero even nilpotent in the catalog");
    case Family::psl22:
      return real.coordinates(elementary(size, 0, 1));
    case Family::osp:
      // Highest root vector of the sp(n) component.
      return real.coordinates(elementary(size, spec.m, size - 1));
    case Family::imported:
      break;
  }
  throw InputError("no catalog entry");
}

std::vector<AlgebraSpec> verification_catalog() {
  return {{Family::sl, 2, 1, {}}, {Family::osp, 1, 2, {}}, {Family::psl22, 2, 2, {}}, {Family::osp, 3, 2, {}}};
}

}  // namespace wsuper
