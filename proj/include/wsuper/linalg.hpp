#pragma once

#include "wsuper/scalar.hpp"

#include <optional>
#include <vector>

namespace wsuper {

/// Reduced row echelon form over the rationals. `pivots` lists pivot columns in row order.
struct Echelon {
  Mat reduced;
  std::vector<Eigen::Index> pivots;
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

Echelon rref(Mat a);

Eigen::Index rank(const Mat& a);

/// Columns form a basis of {x : a x = 0}; the free variable of column k carries a 1.
Mat nullspace(const Mat& a);

/// A particular solution of a x = b with free variables set to zero, if one exists.
std::optional<Vec> solve(const Mat& a, const Vec& b);

Scalar determinant(Mat a);

/// Throws AlgebraError when `a` is singular.
Mat inverse(const Mat& a);

/// Reduced echelon basis of the column span of `a`, returned as columns.
Mat column_span(const Mat& a);

/// Coordinates of v in the basis given by the columns of `basis`; nullopt when v is outside the span.
std::optional<Vec> coordinates(const Mat& basis, const Vec& v);

Mat hstack(const std::vector<Vec>& cols, Eigen::Index rows);

}  // namespace wsuper
