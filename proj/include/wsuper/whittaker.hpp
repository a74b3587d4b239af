#pragma once

#include "wsuper/enveloping.hpp"
#include "wsuper/minimal_grading.hpp"

#include <memory>
#include <utility>

namespace wsuper {

/// Element of Q = U(g)/U(g)(f - chi(f)) in canonical form: a PBW element of the adapted
/// basis in which f never occurs. Each monomial reads (p-part)(z-part).
using WhittakerElement = EnvElement;
/// Element of the Weyl-Clifford algebra A_e: only z letters occur.
using AeElement = EnvElement;

struct MembershipResult {
  bool ok = true;
  int letter = -1;  ///< adapted index of the violating element of n
  WhittakerElement residue;
};

/// Whittaker model over a minimal setup. Owns a PBW engine, so it is not thread-safe;
/// copy it per thread instead.
class WhittakerModel {
 public:
  explicit WhittakerModel(MinimalSetup setup);
  WhittakerModel(const WhittakerModel& other);
  WhittakerModel& operator=(const WhittakerModel&) = delete;

  const MinimalSetup& setup() const { return *m_setup; }
  const SuperAlgebra& algebra() const { return m_setup->alg; }
  PbwEngine& engine() { return m_engine; }

  WhittakerElement one() const { return m_engine.one(); }
  /// The linear element of U(g) attached to an adapted-coordinate vector.
  EnvElement linear(const Vec& v) const { return m_engine.from_vector(v); }

  /// Moves f to the right (already the case in normal form) and replaces it by chi(f).
  WhittakerElement project(const EnvElement& u) const;
  /// project(lift(q1) lift(q2)) with the canonical lift.
  WhittakerElement multiply(const WhittakerElement& q1, const WhittakerElement& q2);
  /// Product through U(p) (x) A_e^op; valid when q2 is ad n-invariant.
  WhittakerElement multiply_mu(const WhittakerElement& q1, const WhittakerElement& q2);
  WhittakerElement supercommutator(const WhittakerElement& q1, const WhittakerElement& q2);

  /// project(x lift(q) - (-1)^{|x||q|} lift(q) x) for x in g(-1) + g(-2), q split by parity.
  WhittakerElement ad_act(const Vec& x, const WhittakerElement& q);
  /// Checks ad-invariance under every z_alpha and f.
  MembershipResult is_w_element(const WhittakerElement& q);

  bool is_z_letter(int i) const { return i >= m_setup->first_z && i < m_setup->idx_f; }
  bool is_p_letter(int i) const { return i < m_setup->first_z; }
  /// Splits a monomial into its U(p) and A_e factors.
  std::pair<Monomial, Monomial> split(const Monomial& m) const;
  bool is_ae_element(const WhittakerElement& q) const;

 private:
  std::shared_ptr<const MinimalSetup> m_setup;
  mutable PbwEngine m_engine;
};

}  // namespace wsuper
