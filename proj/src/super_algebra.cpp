#include "wsuper/super_algebra.hpp"

#include "wsuper/linalg.hpp"

#include <sstream>

namespace wsuper {

namespace {

std::string default_label(int i) { return "x" + std::to_string(i); }

void axpy(Vec& acc, const Scalar& c, const SparseVec& v) {
  for (const auto& [k, a] : v) acc(k) += c * a;
}

}  // namespace

SuperAlgebra::SuperAlgebra(std::string name, std::vector<int> parity, std::vector<std::string> labels)
    : m_name(std::move(name)), m_parity(std::move(parity)), m_labels(std::move(labels)) {
  const size_t n = m_parity.size();
  for (int p : m_parity)
    if (p != 0 && p != 1) throw InputError("parity entries must be 0 or 1");
  if (m_labels.empty())
    for (size_t i = 0; i < n; ++i) m_labels.push_back(default_label(static_cast<int>(i)));
  if (m_labels.size() != n) throw InputError("label count does not match dimension");
  m_table.assign(n * n, SparseVec{});
  m_form = Mat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

bool SuperAlgebra::has_custom_labels() const {
  for (int i = 0; i < dim(); ++i)
    if (m_labels[static_cast<size_t>(i)] != default_label(i)) return true;
  return false;
}

void SuperAlgebra::set_bracket(int i, int j, SparseVec v) {
  for (const auto& [k, c] : v)
    if (k < 0 || k >= dim()) throw InputError("bracket term index out of range");
  m_table[static_cast<size_t>(i) * m_parity.size() + static_cast<size_t>(j)] = std::move(v);
}

int SuperAlgebra::dim_even() const {
  int n = 0;
  for (int p : m_parity) n += (p == 0);
  return n;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) out.emplace_back(static_cast<int>(i), v(i));
  return out;
}

Vec to_dense(const SparseVec& v, int dim) {
  Vec out = Vec::Zero(dim);
  for (const auto& [k, c] : v) out(k) = c;
  return out;
}

Vec bracket(const SuperAlgebra& alg, const Vec& x, const Vec& y) {
  if (x.size() != alg.dim() || y.size() != alg.dim()) throw InputError("bracket: dimension mismatch");
  Vec out = Vec::Zero(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < alg.dim(); ++j) {
      if (y(j).is_zero()) continue;
      axpy(out, x(i) * y(j), alg.bracket_basis(i, j));
    }
  }
  return out;
}

Scalar form(const SuperAlgebra& alg, const Vec& x, const Vec& y) {
  if (x.size() != alg.dim() || y.size() != alg.dim()) throw InputError("form: dimension mismatch");
  return x.dot(alg.form() * y);
}

std::optional<int> parity_of(const SuperAlgebra& alg, const Vec& x) {
  std::optional<int> p;
  for (int i = 0; i < alg.dim(); ++i) {
    if (x(i).is_zero()) continue;
    if (p && *p != alg.parity(i)) return std::nullopt;
    p = alg.parity(i);
  }
  return p;
}

Mat ad_matrix(const SuperAlgebra& alg, const Vec& x) {
  Mat m(alg.dim(), alg.dim());
  for (int j = 0; j < alg.dim(); ++j) m.col(j) = bracket(alg, x, unit(alg.dim(), j));
  return m;
}

SuperAlgebra normalized_form(const SuperAlgebra& alg, const Vec& e, const Vec& f) {
  const Scalar ef = form(alg, e, f);
  if (ef.is_zero()) throw AlgebraError("(e,f) = 0: the form cannot be normalized with this pair");
  SuperAlgebra out = alg;
  out.set_form(alg.form() / ef);
  return out;
}

SuperAlgebra change_basis(const SuperAlgebra& alg, const Mat& basis, std::vector<std::string> labels) {
  const int n = alg.dim();
  if (basis.rows() != n || basis.cols() != n) throw InputError("change_basis: basis must be square");
  const Mat inv = inverse(basis);
  std::vector<int> par(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    auto p = parity_of(alg, basis.col(j));
    if (!p) throw InputError("change_basis: basis vector " + std::to_string(j) + " is not homogeneous");
    par[static_cast<size_t>(j)] = *p;
  }
  SuperAlgebra out(alg.name(), par, std::move(labels));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set_bracket(i, j, to_sparse(inv * bracket(alg, basis.col(i), basis.col(j))));
  out.set_form(basis.transpose() * alg.form() * basis);
  return out;
}

bool AlgebraCheck::ok() const {
  for (const auto& a : axioms)
    if (!a.passed) return false;
  return true;
}

std::string AlgebraCheck::first_failure() const {
  for (const auto& a : axioms)
    if (!a.passed) return a.axiom + ": " + a.witness;
  return {};
}

AlgebraCheck check_algebra(const SuperAlgebra& alg) {
  const int n = alg.dim();
  AlgebraCheck report;
  auto fail = [](AxiomResult& r, std::string w) {
    if (!r.passed) return;
    r.passed = false;
    r.witness = std::move(w);
  };
  auto triple = [](int i, int j, int k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
  };

  AxiomResult additivity{"parity additivity", true, {}};
  AxiomResult antisym{"super-antisymmetry", true, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (const auto& [k, c] : alg.bracket_basis(i, j))
        if (alg.parity(k) != ((alg.parity(i) + alg.parity(j)) & 1)) fail(additivity, triple(i, j, k));
      const Vec lhs = to_dense(alg.bracket_basis(i, j), n);
      const Vec rhs = -sign(alg.parity(i) * alg.parity(j)) * to_dense(alg.bracket_basis(j, i), n);
      for (int k = 0; k < n; ++k)
        if (lhs(k) != rhs(k)) fail(antisym, triple(i, j, k));
    }

  // (-1)^{|i||k|}[x_i,[x_j,x_k]] + (-1)^{|j||i|}[x_j,[x_k,x_i]] + (-1)^{|k||j|}[x_k,[x_i,x_j]] = 0
  AxiomResult jacobi{"super-Jacobi", true, {}};
  for (int i = 0; i < n && jacobi.passed; ++i)
    for (int j = 0; j < n && jacobi.passed; ++j)
      for (int k = 0; k < n && jacobi.passed; ++k) {
        Vec acc = Vec::Zero(n);
        auto add = [&](int a, int b, int c, int s) {
          for (const auto& [m, x] : alg.bracket_basis(b, c)) axpy(acc, sign(s) * x, alg.bracket_basis(a, m));
        };
        add(i, j, k, alg.parity(i) * alg.parity(k));
        add(j, k, i, alg.parity(j) * alg.parity(i));
        add(k, i, j, alg.parity(k) * alg.parity(j));
        if (!is_zero(acc)) fail(jacobi, triple(i, j, k));
      }

  const Mat& g = alg.form();
  AxiomResult even{"form even", true, {}};
  AxiomResult supersym{"form supersymmetric", true, {}};
  AxiomResult invariant{"form invariant", true, {}};
  AxiomResult nondeg{"form non-degenerate", true, {}};
  if (g.rows() != n || g.cols() != n) {
    fail(even, "form has wrong shape");
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!g(i, j).is_zero() && alg.parity(i) != alg.parity(j)) fail(even, triple(i, j, -1));
        if (g(i, j) != sign(alg.parity(i) * alg.parity(j)) * g(j, i)) fail(supersym, triple(i, j, -1));
      }
    // ([x_i,x_j],x_k) = (x_i,[x_j,x_k])
    for (int i = 0; i < n && invariant.passed; ++i)
      for (int j = 0; j < n && invariant.passed; ++j)
        for (int k = 0; k < n && invariant.passed; ++k) {
          Scalar lhs = 0, rhs = 0;
          for (const auto& [m, x] : alg.bracket_basis(i, j)) lhs += x * g(m, k);
          for (const auto& [m, x] : alg.bracket_basis(j, k)) rhs += x * g(i, m);
          if (lhs != rhs) fail(invariant, triple(i, j, k));
        }
    if (determinant(g).is_zero()) fail(nondeg, "Gram determinant is zero");
  }
  report.axioms = {additivity, antisym, jacobi, even, supersym, invariant, nondeg};
  return report;
}

}  // namespace wsuper
