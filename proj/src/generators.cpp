#include "wsuper/generators.hpp"

#include "wsuper/linalg.hpp"

namespace wsuper {

namespace {

// sum_a z_a * lin(y_a) as an element of U(g).
EnvElement z_times(WhittakerModel& model, const std::vector<Vec>& ys) {
  const MinimalSetup& s = model.setup();
  EnvElement out;
  for (int a = 0; a < s.nz(); ++a)
    out += model.engine().multiply(model.linear(s.z[static_cast<size_t>(a)]), model.linear(ys[static_cast<size_t>(a)]));
  return out;
}

// sum_{a,b} z_a z_b [z*_b, [z*_a, w]] in U(g).
EnvElement double_z_term(WhittakerModel& model, const Vec& w) {
  const MinimalSetup& s = model.setup();
  const SuperAlgebra& alg = model.algebra();
  EnvElement out;
  for (int a = 0; a < s.nz(); ++a) {
    const Vec inner = bracket(alg, s.zdual[static_cast<size_t>(a)], w);
    for (int b = 0; b < s.nz(); ++b) {
      const Vec y = bracket(alg, s.zdual[static_cast<size_t>(b)], inner);
      if (is_zero(y)) continue;
      const EnvElement zz = model.engine().multiply(model.linear(s.z[static_cast<size_t>(a)]), model.linear(s.z[static_cast<size_t>(b)]));
      out += model.engine().multiply(zz, model.linear(y));
    }
  }
  return out;
}

WGenerator make(WhittakerModel& model, std::string label, const EnvElement& u) {
  WGenerator g{std::move(label), model.project(u), 0};
  g.kazhdan_degree = kazhdan_degree(g.value, model.setup().grade);
  return g;
}

std::string vec_label(const MinimalSetup& s, const Vec& v) { return render_vector(s.alg, v); }

}  // namespace

bool in_ge0(const MinimalSetup& setup, const Vec& v) {
  return in_piece(setup, v, 0) && is_zero(bracket(setup.alg, setup.triple.e, v));
}

bool in_ge1(const MinimalSetup& setup, const Vec& w) { return in_piece(setup, w, 1); }

WGenerator theta_v(WhittakerModel& model, const Vec& v) {
  const MinimalSetup& s = model.setup();
  if (!in_ge0(s, v)) throw InputError("theta_v: v is not in g^e(0)");
  std::vector<Vec> ys;
  for (const Vec& zd : s.zdual) ys.push_back(bracket(s.alg, zd, v));
  EnvElement u = model.linear(v);
  u.add(z_times(model, ys), Scalar(-1, 2));
  return make(model, "Theta[" + vec_label(s, v) + "]", u);
}

WGenerator theta_w(WhittakerModel& model, const Vec& w) {
  const MinimalSetup& s = model.setup();
  if (!in_ge1(s, w)) throw InputError("theta_w: w is not in g^e(1)");
  std::vector<Vec> ys;
  for (const Vec& zd : s.zdual) ys.push_back(bracket(s.alg, zd, w));
  EnvElement u = model.linear(w);
  u.add(z_times(model, ys), Scalar(-1));
  EnvElement third = double_z_term(model, w);
  third.add(model.linear(bracket(s.alg, w, s.triple.f)), Scalar(-2));
  u.add(third, Scalar(1, 3));
  return make(model, "Theta[" + vec_label(s, w) + "]", u);
}

AeElement phi_w(WhittakerModel& model, const Vec& w) {
  const MinimalSetup& s = model.setup();
  EnvElement u = double_z_term(model, w);
  u.add(model.linear(bracket(s.alg, w, s.triple.f)), -Scalar(3 * (s.s - s.r) + 4, 2));
  u *= Scalar(1, 3);
  return model.project(u);
}

WGenerator theta_w_rewritten(WhittakerModel& model, const Vec& w) {
  const MinimalSetup& s = model.setup();
  if (!in_ge1(s, w)) throw InputError("theta_w: w is not in g^e(1)");
  EnvElement u = model.linear(w);
  for (int a = 0; a < s.nz(); ++a) {
    const Vec y = bracket(s.alg, w, s.zdual[static_cast<size_t>(a)]);
    u.add(model.engine().multiply(model.linear(y), model.linear(s.z[static_cast<size_t>(a)])), sign(s.zparity(a)));
  }
  WGenerator g = make(model, "Theta[" + vec_label(s, w) + "]", u);
  g.value += phi_w(model, w);
  g.kazhdan_degree = kazhdan_degree(g.value, s.grade);
  return g;
}

WGenerator casimir(WhittakerModel& model) {
  const MinimalSetup& s = model.setup();
  PbwEngine& eng = model.engine();
  const EnvElement e = model.linear(s.triple.e), h = model.linear(s.triple.h);
  EnvElement u = Scalar(2) * e;
  u.add(eng.multiply(h, h), Scalar(1, 2));
  u.add(h, -(1 + Scalar(s.s - s.r, 2)));
  for (size_t i = 0; i < s.a.size(); ++i)
    u.add(eng.multiply(model.linear(s.a[i]), model.linear(s.b[i])), sign(*parity_of(s.alg, s.a[i])));
  for (int a = 0; a < s.nz(); ++a) {
    const Vec y = bracket(s.alg, s.triple.e, s.zdual[static_cast<size_t>(a)]);
    u.add(eng.multiply(model.linear(y), model.linear(s.z[static_cast<size_t>(a)])), 2 * sign(s.zparity(a)));
  }
  return make(model, "C", u);
}

WGenerator theta_cas(WhittakerModel& model) {
  const MinimalSetup& s = model.setup();
  WGenerator g{"ThetaCas", {}, 0};
  for (size_t i = 0; i < s.a.size(); ++i) {
    const WGenerator ta = theta_v(model, s.a[i]), tb = theta_v(model, s.b[i]);
    g.value.add(model.multiply(ta.value, tb.value), sign(*parity_of(s.alg, s.a[i])));
  }
  g.kazhdan_degree = kazhdan_degree(g.value, s.grade);
  return g;
}

EnvElement universal_casimir(WhittakerModel& model) {
  const MinimalSetup& s = model.setup();
  const int n = s.dim();
  const Mat d = inverse(s.alg.form()).transpose();
  EnvElement out;
  for (int i = 0; i < n; ++i) {
    Vec dual = Vec::Zero(n);
    for (int k = 0; k < n; ++k) dual(k) = d(i, k);
    out.add(model.engine().multiply(model.linear(unit(n, i)), model.linear(dual)), sign(s.alg.parity(i)));
  }
  return out;
}

}  // namespace wsuper
