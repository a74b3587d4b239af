#pragma once

#include "wsuper/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wsuper {

/// Sparse coefficient list, sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<int, Scalar>>;

/// Finite-dimensional Lie superalgebra on a fixed basis, immutable after construction.
class SuperAlgebra {
 public:
  SuperAlgebra() = default;
  SuperAlgebra(std::string name, std::vector<int> parity, std::vector<std::string> labels);

  const std::string& name() const { return m_name; }
  int dim() const { return static_cast<int>(m_parity.size()); }
  int parity(int i) const { return m_parity[static_cast<size_t>(i)]; }
  const std::vector<int>& parities() const { return m_parity; }
  const std::string& label(int i) const { return m_labels[static_cast<size_t>(i)]; }
  const std::vector<std::string>& labels() const { return m_labels; }
  /// True when the labels were supplied rather than generated.
  bool has_custom_labels() const;

  /// [x_i, x_j] in the basis.
  const SparseVec& bracket_basis(int i, int j) const {
    return m_table[static_cast<size_t>(i) * m_parity.size() + static_cast<size_t>(j)];
  }
  void set_bracket(int i, int j, SparseVec v);

  const Mat& form() const { return m_form; }
  void set_form(Mat g) { m_form = std::move(g); }

  int dim_even() const;
  int dim_odd() const { return dim() - dim_even(); }

  void set_name(std::string n) { m_name = std::move(n); }
  void set_labels(std::vector<std::string> l) { m_labels = std::move(l); }

 private:
  std::string m_name;
  std::vector<int> m_parity;
  std::vector<std::string> m_labels;
  std::vector<SparseVec> m_table;
  Mat m_form;
};

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int dim);

/// Bilinear extension of the structure constants, with Koszul signs carried by the table.
Vec bracket(const SuperAlgebra& alg, const Vec& x, const Vec& y);

/// (x, y) under the stored form.
Scalar form(const SuperAlgebra& alg, const Vec& x, const Vec& y);

/// Parity of a homogeneous nonzero vector; nullopt for zero or mixed vectors.
std::optional<int> parity_of(const SuperAlgebra& alg, const Vec& x);

/// Matrix of ad x acting on coefficient columns.
Mat ad_matrix(const SuperAlgebra& alg, const Vec& x);

/// Same algebra with the form rescaled so that (e, f) = 1.
SuperAlgebra normalized_form(const SuperAlgebra& alg, const Vec& e, const Vec& f);

/// Re-expresses the algebra in a new basis given by the columns of `basis` (old coordinates).
SuperAlgebra change_basis(const SuperAlgebra& alg, const Mat& basis, std::vector<std::string> labels);

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::string witness;
};

struct AlgebraCheck {
  std::vector<AxiomResult> axioms;
  bool ok() const;
  /// First failed axiom formatted for error messages; empty when everything passes.
  std::string first_failure() const;
};

/// Checks parity additivity, super-antisymmetry, super-Jacobi, and the form axioms.
AlgebraCheck check_algebra(const SuperAlgebra& alg);

}  // namespace wsuper
