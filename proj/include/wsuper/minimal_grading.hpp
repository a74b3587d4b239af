#pragma once

#include "wsuper/super_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace wsuper {

struct SL2Triple {
  Vec e, h, f;
};

/// Eigenspaces of ad h, each given by a column basis.
struct Grading {
  std::map<int, Mat> pieces;
  int dim(int i) const;
};

/// Everything derived from (g, e) for a minimal nilpotent e.
///
/// Vectors are stored in the adapted basis of `alg`, ordered
///   h, g^e(0) basis, g(1) basis, e, z_1..z_{s+r}, f
/// so that the p-part precedes g(-1) and f is last. `original` keeps the input basis.
struct MinimalSetup {
  SuperAlgebra original;  ///< input algebra with normalized form
  SuperAlgebra alg;       ///< adapted basis, normalized form
  Mat basis;              ///< adapted basis vectors as columns in `original` coordinates

  SL2Triple triple;  ///< adapted coordinates
  Grading grading;   ///< adapted coordinates

  std::vector<Vec> z;      ///< z_alpha, unit vectors of `alg`
  std::vector<Vec> zdual;  ///< z*_alpha with <z*_alpha, z_beta> = delta
  int s = 0;               ///< dim g(-1)_even
  int r = 0;               ///< dim g(-1)_odd
  /// False only if the odd pairing could not be put in hyperbolic normal form over Q.
  bool split_pairing = true;

  std::vector<Vec> ge0, ge1;  ///< bases of g^e(0), g^e(1)
  std::vector<Vec> a, b;      ///< dual bases of g^e(0): (a_i, b_j) = delta

  int idx_h = 0, first_ge0 = 0, first_g1 = 0, idx_e = 0, first_z = 0, idx_f = 0;
  std::vector<int> grade;  ///< grade of each adapted basis letter

  int dim() const { return alg.dim(); }
  int nz() const { return s + r; }
  int zparity(int alpha) const { return alg.parity(first_z + alpha); }

  Vec to_adapted(const Vec& original_coords) const;
  Vec to_original(const Vec& adapted_coords) const;
};

/// Solves for h and f, grades by ad h, and builds the paired and dual bases.
/// `e` is given in the coordinates of `alg`.
MinimalSetup build_minimal_setup(const SuperAlgebra& alg, const Vec& e);

/// <x, y> = (e, [x, y]).
Scalar pairing(const MinimalSetup& setup, const Vec& x, const Vec& y);

/// chi(x) = (e, x).
Scalar chi(const MinimalSetup& setup, const Vec& x);

/// x - (h,x)/2 h for x in g(0).
Vec sharp(const MinimalSetup& setup, const Vec& x);

/// Grade of a homogeneous vector under ad h; nullopt when it is not an eigenvector.
std::optional<int> grade_of(const MinimalSetup& setup, const Vec& x);

bool in_piece(const MinimalSetup& setup, const Vec& x, int grade);

struct KwDimensions {
  int d0 = 0;
  int d1 = 0;
  int exp_p = 0;  ///< d0 / 2
  int exp_2 = 0;  ///< ceil(d1 / 2)
  int parity_r = 0;
  bool parity_matches = false;
  bool d0_even = false;
};

KwDimensions kw_dimensions(const MinimalSetup& setup);

/// Human-readable summary lines (grading dims, s, r, d0, d1, bound exponents).
std::string setup_summary(const MinimalSetup& setup);

}  // namespace wsuper
