#pragma once

#include "wsuper/whittaker.hpp"

#include <string>

namespace wsuper {

struct WGenerator {
  std::string label;
  WhittakerElement value;
  int kazhdan_degree = 0;
};

/// (v - 1/2 sum_a z_a [z*_a, v]) (x) 1 for v in g^e(0).
WGenerator theta_v(WhittakerModel& model, const Vec& v);

/// (w - sum_a z_a [z*_a, w] + 1/3 (sum_{a,b} z_a z_b [z*_b, [z*_a, w]] - 2 [w, f])) (x) 1 for w in g^e(1).
WGenerator theta_w(WhittakerModel& model, const Vec& w);

/// The same generator written as w + sum_a (-1)^{|a|} [w, z*_a] z_a + phi_w.
WGenerator theta_w_rewritten(WhittakerModel& model, const Vec& w);

/// phi_w = 1/3 (sum_{a,b} z_a z_b [z*_b, [z*_a, w]] - (3(s-r)+4)/2 [w, f]) as an A_e element.
AeElement phi_w(WhittakerModel& model, const Vec& w);

/// 2e + h^2/2 - (1 + (s-r)/2) h + sum_i (-1)^{|i|} a_i b_i + 2 sum_a (-1)^{|a|} [e, z*_a] z_a.
WGenerator casimir(WhittakerModel& model);

/// sum_i (-1)^{|i|} Theta_{a_i} Theta_{b_i}.
WGenerator theta_cas(WhittakerModel& model);

/// Quadratic Casimir of U(g), sum_i (-1)^{|x_i|} x_i x^i over dual bases (x_i, x^j) = delta.
EnvElement universal_casimir(WhittakerModel& model);

bool in_ge0(const MinimalSetup& setup, const Vec& v);
bool in_ge1(const MinimalSetup& setup, const Vec& w);

}  // namespace wsuper
