#pragma once

#include "wsuper/generators.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wsuper {

struct RelationReport {
  std::string id;
  bool passed = true;
  WhittakerElement residue;  ///< first nonzero residue, empty on pass
  std::string witness;       ///< which instance failed
  std::vector<std::string> notes;
  double seconds = 0;
};

struct C0Pair {
  int i = 0, j = 0;  ///< indices into the g^e(1) basis
  Scalar pairing;    ///< ([w_i, w_j], f)
  bool scalar = true;
  Scalar b;                  ///< B(w_i, w_j) when scalar
  std::optional<Scalar> c0;  ///< -2 b / pairing when pairing != 0
  std::optional<Scalar> double_sum;  ///< chi-evaluated double bracket sum, when pairing != 0
};

struct C0Result {
  std::vector<C0Pair> pairs;
  std::optional<Scalar> c0;       ///< common value when consistent and determined
  std::optional<Scalar> formula;  ///< closed-form value on the first pair with nonzero pairing
  bool consistent = true;
  bool formula_matches = true;
  RelationReport relation;  ///< the [Theta_w, Theta_w] relation with the extracted constant
};

/// Suite ids, in run order.
const std::vector<std::string>& relation_ids();

/// Verification of the generator relations of a minimal W-superalgebra on one setup.
/// Holds a model and the generators; not thread-safe.
class RelationsLab {
 public:
  explicit RelationsLab(MinimalSetup setup);

  WhittakerModel& model() { return m_model; }
  const MinimalSetup& setup() const { return m_model.setup(); }

  const WGenerator& theta_ge0(size_t i) const { return m_tv[i]; }
  const WGenerator& theta_ge1(size_t i) const { return m_tw[i]; }
  const WGenerator& casimir() const { return m_c; }
  const WGenerator& theta_cas() const { return m_cas; }

  /// Theta of an arbitrary g^e(0) vector (by linearity).
  WhittakerElement theta0(const Vec& v);

  RelationReport identities_suite();
  /// Membership, Kazhdan degree bounds, leading terms, and agreement of the two Theta_w forms.
  RelationReport generators_check();
  RelationReport verify_deg0();
  RelationReport verify_deg01();
  /// C supercommutes with every generator.
  RelationReport verify_central();
  /// sigma negates odd Kazhdan degree terms: fixes Theta_v and C, negates Theta_w.
  RelationReport sigma_parity();

  /// B(w1, w2) assembled from generators.
  WhittakerElement b_element(const Vec& w1, const Vec& w2);
  /// The explicit right-hand side written through A_e products and phi_w.
  WhittakerElement b_explicit(const Vec& w1, const Vec& w2);
  /// sum_{a,b} sign chi([[z_b,[z_a,w1]],[z*_b,[z*_a,w2]]]).
  Scalar double_sum(const Vec& w1, const Vec& w2);
  /// Scalar closed form of B(w1, w2).
  Scalar b_scalar_formula(const Vec& w1, const Vec& w2);

  C0Result extract_c0();
  /// Throws InputError when ([w1,w2],f) = 0.
  Scalar c0_formula(const Vec& w1, const Vec& w2);
  RelationReport verify_357_358();
  RelationReport verify_b_invariance();
  RelationReport one_dim_rep();
  RelationReport w_pbw_check(int max_deg);

  /// Runs the requested ids (all when empty) in the fixed order.
  std::vector<RelationReport> run(const std::vector<std::string>& ids, int max_deg = 4);

  /// Cached extract_c0 result.
  const C0Result& c0_result();

  /// Negative control: perturbs Theta of the first g^e(0) basis vector (or Theta_w if none).
  void corrupt_for_testing();

 private:
  Vec sharp_of(const Vec& x) const;
  WhittakerElement theta_sharp(const Vec& x);

  WhittakerModel m_model;
  std::vector<WGenerator> m_tv, m_tw;
  WGenerator m_c, m_cas;
  std::optional<C0Result> m_c0;
};

}  // namespace wsuper
