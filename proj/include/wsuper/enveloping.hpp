#pragma once

#include "wsuper/super_algebra.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace wsuper {

/// PBW monomial: exponent of each basis letter, letters ordered by basis index.
/// Odd letters have exponent 0 or 1.
struct Monomial {
  std::vector<std::uint8_t> exp;

  Monomial() = default;
  explicit Monomial(int dim) : exp(static_cast<size_t>(dim), 0) {}

  int length() const;
  /// Highest letter present, -1 for the empty monomial.
  int last() const;
  bool empty() const { return last() < 0; }
  /// Letters in order, repeated by exponent.
  std::vector<int> letters() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
  /// Shorter monomials first, then lexicographic on exponents.
  friend bool operator<(const Monomial& a, const Monomial& b);
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const noexcept;
};

/// Element of U(g) in PBW normal form: no zero coefficients are stored.
class EnvElement {
 public:
  using Terms = std::map<Monomial, Scalar>;

  EnvElement() = default;
  static EnvElement scalar(int dim, const Scalar& c);
  static EnvElement monomial(const Monomial& m, const Scalar& c = Scalar(1));

  const Terms& terms() const { return m_terms; }
  bool is_zero() const { return m_terms.empty(); }
  size_t size() const { return m_terms.size(); }

  /// Coefficient of the empty monomial.
  Scalar constant_term() const;
  /// True when every monomial is empty (including the zero element).
  bool is_scalar() const;

  void add(const Monomial& m, const Scalar& c);
  void add(const EnvElement& other, const Scalar& c = Scalar(1));

  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  EnvElement& operator*=(const Scalar& c);
  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  friend EnvElement operator*(const Scalar& c, EnvElement a) { return a *= c; }
  friend EnvElement operator-(EnvElement a) { return a *= Scalar(-1); }
  friend bool operator==(const EnvElement& a, const EnvElement& b) { return a.m_terms == b.m_terms; }
  friend bool operator!=(const EnvElement& a, const EnvElement& b) { return !(a == b); }

 private:
  Terms m_terms;
};

int monomial_parity(const SuperAlgebra& alg, const Monomial& m);

/// Parity of a homogeneous element; nullopt for zero or mixed elements.
std::optional<int> element_parity(const SuperAlgebra& alg, const EnvElement& u);

/// Splits an element into its even and odd parts.
std::pair<EnvElement, EnvElement> split_parity(const SuperAlgebra& alg, const EnvElement& u);

/// Sum over letters of exponent * (grade + 2).
int kazhdan_degree(const Monomial& m, const std::vector<int>& grade);
/// Sum over letters of exponent * grade; g(-1) letters contribute -1 each.
int weight(const Monomial& m, const std::vector<int>& grade);
/// Maximum Kazhdan degree over the terms, -1 for zero.
int kazhdan_degree(const EnvElement& u, const std::vector<int>& grade);

/// Renders terms as e.g. "3/2·e·h − z1·z2", in the stored deterministic order.
std::string render(const SuperAlgebra& alg, const EnvElement& u);
/// Renders the linear element sum_i v_i x_i.
std::string render_vector(const SuperAlgebra& alg, const Vec& v);

/// PBW straightening engine for U(alg). Products monomial*letter are memoized, so an engine
/// must not be shared between threads.
class PbwEngine {
 public:
  explicit PbwEngine(std::shared_ptr<const SuperAlgebra> alg);

  const SuperAlgebra& algebra() const { return *m_alg; }
  int dim() const { return m_alg->dim(); }

  EnvElement one() const;
  EnvElement letter(int i) const;
  /// Linear element sum_i v_i x_i.
  EnvElement from_vector(const Vec& v) const;
  /// Straightens the word x_{w_0} x_{w_1} ... .
  EnvElement word(const std::vector<int>& letters);

  EnvElement multiply(const EnvElement& u, const EnvElement& v);
  /// u * x_i.
  EnvElement multiply_letter(const EnvElement& u, int i);
  /// uv - (-1)^{|u||v|} vu for homogeneous u, v; throws InputError on mixed parity.
  EnvElement supercommutator(const EnvElement& u, const EnvElement& v);

  size_t cache_size() const { return m_cache.size(); }

 private:
  const EnvElement& mono_times_letter(const Monomial& m, int x);

  struct Key {
    Monomial m;
    int x;
    friend bool operator==(const Key& a, const Key& b) { return a.x == b.x && a.m == b.m; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const noexcept { return MonomialHash{}(k.m) * 31u + static_cast<size_t>(k.x); }
  };

  std::shared_ptr<const SuperAlgebra> m_alg;
  std::unordered_map<Key, EnvElement, KeyHash> m_cache;
};

}  // namespace wsuper
