#include "wsuper/linalg.hpp"

#include <utility>

namespace wsuper {

Scalar parse_scalar(const std::string& s) {
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const std::string den = s.substr(slash + 1);
    if (den.find_first_not_of("0+-") == std::string::npos) throw InputError("not a rational number: '" + s + "'");
  }
  try {
    return Scalar(s);
  } catch (const std::exception&) {
    throw InputError("not a rational number: '" + s + "'");
  }
}

Echelon rref(Mat a) {
  Echelon out;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

Eigen::Index rank(const Mat& a) { return rref(a).rank(); }

Mat nullspace(const Mat& a) {
  const Echelon e = rref(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Vec> cols;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec v = Vec::Zero(n);
    v(free) = 1;
    for (Eigen::Index r = 0; r < e.rank(); ++r) v(e.pivots[static_cast<size_t>(r)]) = -e.reduced(r, free);
    cols.push_back(std::move(v));
  }
  return hstack(cols, n);
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Mat aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec x = Vec::Zero(a.cols());
  for (Eigen::Index r = 0; r < e.rank(); ++r) x(e.pivots[static_cast<size_t>(r)]) = e.reduced(r, a.cols());
  return x;
}

Scalar determinant(Mat a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw InputError("determinant of a non-square matrix");
  Scalar det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

Mat inverse(const Mat& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw InputError("inverse of a non-square matrix");
  Mat aug(n, 2 * n);
  aug << a, Mat::Identity(n, n);
  const Echelon e = rref(aug);
  if (e.rank() < n || e.pivots[static_cast<size_t>(n - 1)] >= n) throw AlgebraError("matrix is singular");
  return e.reduced.rightCols(n);
}

Mat column_span(const Mat& a) {
  const Echelon e = rref(a.transpose());
  return e.reduced.topRows(e.rank()).transpose();
}

std::optional<Vec> coordinates(const Mat& basis, const Vec& v) { return solve(basis, v); }

Mat hstack(const std::vector<Vec>& cols, Eigen::Index rows) {
  Mat m(rows, static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = cols[j];
  return m;
}

}  // namespace wsuper
