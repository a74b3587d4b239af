#pragma once

#include "wsuper/super_algebra.hpp"

#include <string>
#include <vector>

namespace wsuper {

enum class Family { gl, sl, psl22, osp, imported };

struct AlgebraSpec {
  Family family = Family::gl;
  int m = 0;
  int n = 0;
  /// JSON structure-constant document, used when family == imported.
  std::string table;
};

/// Parses "gl", "sl", "psl22", "osp"; throws InputError otherwise.
Family parse_family(const std::string& s);
std::string family_name(Family f);

/// Basis matrices of a matrix family on C^{m|n} (first m coordinates even).
/// For psl22 the basis is a complement of the identity inside sl(2|2).
struct MatrixRealization {
  int m = 0;
  int n = 0;
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  /// Matrices spanning the central ideal factored out (the identity for psl22).
  std::vector<Mat> kernel;

  /// Coordinates of a matrix in `basis`, dropping the kernel component; throws when outside the span.
  Vec coordinates(const Mat& x) const;
};

MatrixRealization matrix_realization(const AlgebraSpec& spec);

/// e_{ij} on C^{m|n}, 0-based.
Mat elementary(int size, int i, int j);

/// Super-commutator of matrices whose parities are computed from the block structure.
Mat matrix_bracket(const Mat& x, const Mat& y, int m);

/// Block parity of a homogeneous matrix, nullopt when mixed or zero.
std::optional<int> matrix_parity(const Mat& x, int m);

Scalar supertrace(const Mat& x, int m);

/// Builds and validates the algebra; the form is the (unnormalized) supertrace form.
SuperAlgebra build_algebra(const AlgebraSpec& spec);

/// Default minimal nilpotent element for a family, as coordinates in build_algebra's basis.
/// Minimality is not trusted here; build_minimal_setup re-verifies it.
Vec catalog_e(const AlgebraSpec& spec);

/// The verification catalog: sl(2|1), osp(1|2), psl22, osp(3|2).
std::vector<AlgebraSpec> verification_catalog();

std::string spec_label(const AlgebraSpec& spec);

}  // namespace wsuper
