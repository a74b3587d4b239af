#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace wsuper {

/// Exact rational coefficient type. GMP keeps it in lowest terms with a positive denominator.
using Scalar = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename T> using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T> using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = VectorX<Scalar>;
using Mat = MatrixX<Scalar>;

/// Thrown for malformed user input (bad parameters, dimension mismatch, parse errors).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a mathematical precondition fails (non-minimal e, degenerate form, ...).
struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Scalar& x) { return x.is_zero(); }

template <typename Derived> bool is_zero(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j)
    for (Eigen::Index i = 0; i < v.rows(); ++i)
      if (!Scalar(v(i, j)).is_zero()) return false;
  return true;
}

inline Vec unit(Eigen::Index n, Eigen::Index k) {
  Vec v = Vec::Zero(n);
  v(k) = 1;
  return v;
}

inline std::string to_string(const Scalar& x) { return x.str(); }

/// Parses "a", "-a" or "a/b" with arbitrary-size integers.
Scalar parse_scalar(const std::string& s);

inline Scalar sign(int parity) { return (parity & 1) ? Scalar(-1) : Scalar(1); }

}  // namespace wsuper
