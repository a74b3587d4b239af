#include "wsuper/whittaker.hpp"

namespace wsuper {

namespace {

std::shared_ptr<const SuperAlgebra> alias_algebra(const std::shared_ptr<const MinimalSetup>& s) {
  return std::shared_ptr<const SuperAlgebra>(s, &s->alg);
}

}  // namespace

WhittakerModel::WhittakerModel(MinimalSetup setup)
    : m_setup(std::make_shared<const MinimalSetup>(std::move(setup))), m_engine(alias_algebra(m_setup)) {}

WhittakerModel::WhittakerModel(const WhittakerModel& other)
    : m_setup(other.m_setup), m_engine(alias_algebra(m_setup)) {}

WhittakerElement WhittakerModel::project(const EnvElement& u) const {
  const auto f = static_cast<size_t>(m_setup->idx_f);
  const Scalar chi_f = chi(*m_setup, m_setup->triple.f);
  WhittakerElement out;
  for (const auto& [m, c] : u.terms()) {
    const int k = m.exp[f];
    if (k == 0) {
      out.add(m, c);
      continue;
    }
    Monomial rest = m;
    rest.exp[f] = 0;
    Scalar factor = c;
    for (int i = 0; i < k; ++i) factor *= chi_f;
    out.add(rest, factor);
  }
  return out;
}

WhittakerElement WhittakerModel::multiply(const WhittakerElement& q1, const WhittakerElement& q2) {
  return project(m_engine.multiply(q1, q2));
}

std::pair<Monomial, Monomial> WhittakerModel::split(const Monomial& m) const {
  Monomial p(m_setup->dim()), z(m_setup->dim());
  for (size_t i = 0; i < m.exp.size(); ++i) (is_z_letter(static_cast<int>(i)) ? z : p).exp[i] = m.exp[i];
  return {p, z};
}

bool WhittakerModel::is_ae_element(const WhittakerElement& q) const {
  for (const auto& [m, c] : q.terms())
    for (size_t i = 0; i < m.exp.size(); ++i)
      if (m.exp[i] && !is_z_letter(static_cast<int>(i))) return false;
  return true;
}

WhittakerElement WhittakerModel::multiply_mu(const WhittakerElement& q1, const WhittakerElement& q2) {
  const SuperAlgebra& alg = algebra();
  const auto p2 = element_parity(alg, q2);
  if (!q2.is_zero() && !p2) throw InputError("multiply_mu: right factor must be parity-homogeneous");
  WhittakerElement out;
  for (const auto& [m1, c1] : q1.terms()) {
    const auto [x1, u1] = split(m1);
    const Scalar s = sign(p2.value_or(0) * monomial_parity(alg, u1));
    for (const auto& [m2, c2] : q2.terms()) {
      const auto [x2, u2] = split(m2);
      // (x1 (x) u1)(x2 (x) u2) = (-1)^{|q2||u1|} x1 x2 (x) u2 u1
      const EnvElement left = m_engine.multiply(EnvElement::monomial(x1), EnvElement::monomial(x2));
      const EnvElement right = project(m_engine.multiply(EnvElement::monomial(u2), EnvElement::monomial(u1)));
      for (const auto& [pm, pc] : left.terms())
        for (const auto& [zm, zc] : right.terms()) {
          Monomial joined = pm;
          for (size_t i = 0; i < joined.exp.size(); ++i) joined.exp[i] += zm.exp[i];
          out.add(joined, s * c1 * c2 * pc * zc);
        }
    }
  }
  return out;
}

WhittakerElement WhittakerModel::supercommutator(const WhittakerElement& q1, const WhittakerElement& q2) {
  if (q1.is_zero() || q2.is_zero()) return {};
  const auto p1 = element_parity(algebra(), q1), p2 = element_parity(algebra(), q2);
  if (!p1 || !p2) throw InputError("supercommutator: arguments must be parity-homogeneous");
  WhittakerElement out = multiply(q1, q2);
  out.add(multiply(q2, q1), -sign(*p1 * *p2));
  return out;
}

WhittakerElement WhittakerModel::ad_act(const Vec& x, const WhittakerElement& q) {
  const MinimalSetup& s = setup();
  for (int i = 0; i < s.dim(); ++i)
    if (!x(i).is_zero() && !is_z_letter(i) && i != s.idx_f) throw InputError("ad_act: x is not in g(-1) + g(-2)");
  const auto px = parity_of(algebra(), x);
  if (!px) {
    if (is_zero(x)) return {};
    throw InputError("ad_act: x must be parity-homogeneous");
  }
  const EnvElement lx = linear(x);
  const auto [even, odd] = split_parity(algebra(), q);
  WhittakerElement out;
  for (const auto& [part, pq] : {std::pair<const EnvElement*, int>{&even, 0}, {&odd, 1}}) {
    if (part->is_zero()) continue;
    EnvElement t = m_engine.multiply(lx, *part);
    t.add(m_engine.multiply(*part, lx), -sign(*px * pq));
    out += project(t);
  }
  return out;
}

MembershipResult WhittakerModel::is_w_element(const WhittakerElement& q) {
  const MinimalSetup& s = setup();
  std::vector<int> letters;
  for (int i = s.first_z; i < s.idx_f; ++i) letters.push_back(i);
  letters.push_back(s.idx_f);
  for (int i : letters) {
    WhittakerElement res = ad_act(unit(s.dim(), i), q);
    if (!res.is_zero()) return {false, i, std::move(res)};
  }
  return {};
}

}  // namespace wsuper
