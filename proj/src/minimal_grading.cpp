#include "wsuper/minimal_grading.hpp"

#include "wsuper/linalg.hpp"

#include <functional>
#include <sstream>

namespace wsuper {

namespace {

std::optional<Scalar> rational_sqrt(const Scalar& q) {
  if (q < 0) return std::nullopt;
  const Integer n = numerator(q), d = denominator(q);
  const Integer rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Scalar(rn, rd);
}

std::vector<Vec> columns(const Mat& m) {
  std::vector<Vec> out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

bool is_unit_vector(const Vec& v, int& index) {
  index = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    if (v(i) != 1 || index >= 0) return false;
    index = static_cast<int>(i);
  }
  return index >= 0;
}

using Pairing = std::function<Scalar(const Vec&, const Vec&)>;

// Removes from each w the components along `chosen`, so that <w, c> = 0 for every chosen c.
void orthogonalize(std::vector<Vec>& rest, const std::vector<Vec>& chosen, const Pairing& pair) {
  const auto k = static_cast<Eigen::Index>(chosen.size());
  Mat gram(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) gram(i, j) = pair(chosen[static_cast<size_t>(i)], chosen[static_cast<size_t>(j)]);
  const Mat inv_t = inverse(gram.transpose());
  for (auto& w : rest) {
    Vec g(k);
    for (Eigen::Index l = 0; l < k; ++l) g(l) = pair(w, chosen[static_cast<size_t>(l)]);
    const Vec t = inv_t * g;
    for (Eigen::Index l = 0; l < k; ++l) w -= t(l) * chosen[static_cast<size_t>(l)];
  }
}

// <u_i, u_j> = i* delta_{i+j,s+1} with i* = -1 for i <= s/2.
std::vector<Vec> symplectic_basis(std::vector<Vec> rest, const Pairing& pair) {
  const size_t s = rest.size();
  std::vector<Vec> u(s);
  size_t lo = 0, hi = s;
  while (!rest.empty()) {
    if (rest.size() == 1) throw AlgebraError("even part of g(-1) is odd-dimensional");
    const Vec x = rest.front();
    size_t k = 1;
    while (k < rest.size() && pair(x, rest[k]).is_zero()) ++k;
    if (k == rest.size()) throw AlgebraError("pairing on g(-1)_even is degenerate");
    const Vec y = Vec(-rest[k] / pair(x, rest[k]));
    rest.erase(rest.begin() + static_cast<long>(k));
    rest.erase(rest.begin());
    u[lo++] = x;
    u[--hi] = y;
    orthogonalize(rest, {x, y}, pair);
  }
  return u;
}

// <v_i, v_j> = delta_{i+j,r+1}; a leftover anisotropic vector is scaled to <v,v> = 1 when possible.
std::vector<Vec> hyperbolic_basis(std::vector<Vec> rest, const Pairing& pair, bool& split) {
  const size_t r = rest.size();
  std::vector<Vec> v(r);
  size_t lo = 0, hi = r;
  while (!rest.empty()) {
    if (rest.size() >= 2) {
      size_t iso = 0;
      while (iso < rest.size() && !pair(rest[iso], rest[iso]).is_zero()) ++iso;
      if (iso == rest.size()) {
        // Look for an isotropic combination x + t y of the first two vectors.
        const Scalar a = pair(rest[0], rest[0]), b = pair(rest[0], rest[1]), d = pair(rest[1], rest[1]);
        const auto root = rational_sqrt(b * b - a * d);
        if (root && !d.is_zero()) {
          rest[0] = Vec(rest[0] + ((-b + *root) / d) * rest[1]);
          iso = 0;
        }
      }
      if (iso < rest.size()) {
        const Vec x = rest[iso];
        size_t k = 0;
        while (k < rest.size() && (k == iso || pair(x, rest[k]).is_zero())) ++k;
        if (k == rest.size()) throw AlgebraError("pairing on g(-1)_odd is degenerate");
        const Scalar c = pair(x, rest[k]);
        const Vec y = Vec(rest[k] / c - (pair(rest[k], rest[k]) / (2 * c * c)) * x);
        rest.erase(rest.begin() + static_cast<long>(std::max(iso, k)));
        rest.erase(rest.begin() + static_cast<long>(std::min(iso, k)));
        v[lo++] = x;
        v[--hi] = y;
        orthogonalize(rest, {x, y}, pair);
        continue;
      }
    }
    // Anisotropic leftover: goes to the middle slot(s).
    Vec x = rest.front();
    rest.erase(rest.begin());
    const Scalar c = pair(x, x);
    if (c.is_zero()) throw AlgebraError("pairing on g(-1)_odd is degenerate");
    if (const auto root = rational_sqrt(c)) x /= *root;
    if (!rest.empty() || pair(x, x) != 1) split = false;
    v[lo++] = x;
    orthogonalize(rest, {x}, pair);
  }
  return v;
}

}  // namespace

int Grading::dim(int i) const {
  auto it = pieces.find(i);
  return it == pieces.end() ? 0 : static_cast<int>(it->second.cols());
}

Vec MinimalSetup::to_adapted(const Vec& v) const { return *solve(basis, v); }
Vec MinimalSetup::to_original(const Vec& v) const { return basis * v; }

Scalar pairing(const MinimalSetup& setup, const Vec& x, const Vec& y) {
  return form(setup.alg, setup.triple.e, bracket(setup.alg, x, y));
}

Scalar chi(const MinimalSetup& setup, const Vec& x) { return form(setup.alg, setup.triple.e, x); }

Vec sharp(const MinimalSetup& setup, const Vec& x) {
  if (!in_piece(setup, x, 0)) throw InputError("sharp: argument is not in g(0)");
  return x - (form(setup.alg, setup.triple.h, x) / 2) * setup.triple.h;
}

std::optional<int> grade_of(const MinimalSetup& setup, const Vec& x) {
  for (int i = -2; i <= 2; ++i)
    if (!is_zero(x) && in_piece(setup, x, i)) return i;
  return std::nullopt;
}

bool in_piece(const MinimalSetup& setup, const Vec& x, int grade) {
  return bracket(setup.alg, setup.triple.h, x) == Scalar(grade) * x;
}

MinimalSetup build_minimal_setup(const SuperAlgebra& input, const Vec& e) {
  const int n = input.dim();
  if (e.size() != n) throw InputError("e has the wrong dimension");
  if (is_zero(e)) throw AlgebraError("e is zero");
  if (parity_of(input, e) != 0) throw AlgebraError("e is not even");

  const Mat ad_e = ad_matrix(input, e);
  auto z0 = solve(ad_e * ad_e, Vec(-2 * e));
  if (!z0) throw AlgebraError("not an sl2-embeddable nilpotent: no h with [h,e]=2e in [e,g]");
  const Vec h = bracket(input, e, *z0);
  const Mat ad_h = ad_matrix(input, h);
  Mat sys(2 * n, n);
  sys << ad_e, ad_h + 2 * Mat::Identity(n, n);
  Vec rhs(2 * n);
  rhs << h, Vec::Zero(n);
  auto f = solve(sys, rhs);
  if (!f) throw AlgebraError("not an sl2-embeddable nilpotent: no f with [e,f]=h, [h,f]=-2f");
  if (bracket(input, h, e) != Vec(2 * e) || bracket(input, e, *f) != h || bracket(input, h, *f) != Vec(-2 * *f))
    throw AlgebraError("sl2-triple identities fail");

  std::map<int, Mat> pieces;
  int total = 0;
  for (int i = -2; i <= 2; ++i) {
    pieces[i] = column_span(nullspace(ad_h - Scalar(i) * Mat::Identity(n, n)));
    total += static_cast<int>(pieces[i].cols());
  }
  if (total != n) {
    for (int i = 3; i <= 2 * n + 2; ++i)
      for (int sgn : {1, -1})
        if (nullspace(ad_h - Scalar(sgn * i) * Mat::Identity(n, n)).cols() > 0)
          throw AlgebraError("not minimal: ad h has eigenvalue " + std::to_string(sgn * i));
    throw AlgebraError("not minimal: ad h is not diagonalizable with integer eigenvalues");
  }
  if (pieces[2].cols() != 1) throw AlgebraError("not minimal: dim g(2) = " + std::to_string(pieces[2].cols()));

  const SuperAlgebra normalized = normalized_form(input, e, *f);
  auto pair_orig = [&](const Vec& x, const Vec& y) { return form(normalized, e, bracket(normalized, x, y)); };

  // g(-1) split by parity, then paired bases.
  std::vector<Vec> even_m1, odd_m1;
  for (const Vec& v : columns(pieces[-1])) (parity_of(input, v) == 0 ? even_m1 : odd_m1).push_back(v);
  MinimalSetup setup;
  const std::vector<Vec> u = symplectic_basis(even_m1, pair_orig);
  const std::vector<Vec> vv = hyperbolic_basis(odd_m1, pair_orig, setup.split_pairing);

  // g^e(0): kernel of ad e on g(0).
  const Mat g0 = pieces[0];
  const Mat ge0 = column_span(g0 * nullspace(ad_e * g0));
  if (ge0.cols() + 1 != g0.cols()) throw AlgebraError("g^e(0) does not have codimension 1 in g(0)");
  const Mat g1 = pieces[1];
  if (!is_zero(Mat(ad_e * g1))) throw AlgebraError("g(1) is not centralized by e");

  // Adapted basis: h, g^e(0), g(1), e, z, f.
  std::vector<Vec> cols;
  std::vector<std::string> labels;
  std::vector<int> grade;
  auto push = [&](const Vec& v, std::string label, int gr) {
    cols.push_back(v);
    labels.push_back(std::move(label));
    grade.push_back(gr);
  };
  auto nice = [&](const Vec& v, const std::string& fallback) {
    int k;
    return is_unit_vector(v, k) ? input.label(k) : fallback;
  };
  push(h, "h", 0);
  setup.idx_h = 0;
  setup.first_ge0 = 1;
  for (Eigen::Index j = 0; j < ge0.cols(); ++j) push(ge0.col(j), nice(ge0.col(j), "v" + std::to_string(j + 1)), 0);
  setup.first_g1 = static_cast<int>(cols.size());
  for (Eigen::Index j = 0; j < g1.cols(); ++j) push(g1.col(j), nice(g1.col(j), "w" + std::to_string(j + 1)), 1);
  setup.idx_e = static_cast<int>(cols.size());
  push(e, "e", 2);
  setup.first_z = static_cast<int>(cols.size());
  int zi = 1;
  for (const Vec& x : u) push(x, "z" + std::to_string(zi++), -1);
  for (const Vec& x : vv) push(x, "z" + std::to_string(zi++), -1);
  setup.idx_f = static_cast<int>(cols.size());
  push(*f, "f", -2);
  if (static_cast<int>(cols.size()) != n) throw AlgebraError("adapted basis has the wrong size");

  setup.original = normalized;
  setup.basis = hstack(cols, n);
  setup.alg = change_basis(normalized, setup.basis, labels);
  setup.alg.set_name(input.name());
  setup.grade = grade;
  setup.s = static_cast<int>(u.size());
  setup.r = static_cast<int>(vv.size());
  setup.triple = {unit(n, setup.idx_e), unit(n, setup.idx_h), unit(n, setup.idx_f)};
  for (const auto& [i, m] : pieces) {
    std::vector<Vec> adapted;
    for (const Vec& v : columns(m)) adapted.push_back(setup.to_adapted(v));
    setup.grading.pieces[i] = column_span(hstack(adapted, n));
  }

  for (int k = 0; k < setup.nz(); ++k) setup.z.push_back(unit(n, setup.first_z + k));
  Mat gram(setup.nz(), setup.nz());
  for (int i = 0; i < setup.nz(); ++i)
    for (int j = 0; j < setup.nz(); ++j) gram(i, j) = pairing(setup, setup.z[static_cast<size_t>(i)], setup.z[static_cast<size_t>(j)]);
  const Mat ginv = setup.nz() ? inverse(gram) : Mat(0, 0);
  for (int a = 0; a < setup.nz(); ++a) {
    Vec d = Vec::Zero(n);
    for (int g = 0; g < setup.nz(); ++g) d += ginv(a, g) * setup.z[static_cast<size_t>(g)];
    setup.zdual.push_back(d);
  }

  for (Eigen::Index j = 0; j < ge0.cols(); ++j) setup.ge0.push_back(unit(n, setup.first_ge0 + static_cast<int>(j)));
  for (Eigen::Index j = 0; j < g1.cols(); ++j) setup.ge1.push_back(unit(n, setup.first_g1 + static_cast<int>(j)));
  const auto k = static_cast<Eigen::Index>(setup.ge0.size());
  Mat g_ab(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) g_ab(i, j) = form(setup.alg, setup.ge0[static_cast<size_t>(i)], setup.ge0[static_cast<size_t>(j)]);
  // b_j = sum_k D_{jk} a_k with (a_i, b_j) = delta, i.e. D^T = G^{-1}.
  const Mat d = k ? Mat(inverse(g_ab).transpose()) : Mat(0, 0);
  for (Eigen::Index i = 0; i < k; ++i) {
    setup.a.push_back(setup.ge0[static_cast<size_t>(i)]);
    Vec bi = Vec::Zero(n);
    for (Eigen::Index l = 0; l < k; ++l) bi += d(i, l) * setup.ge0[static_cast<size_t>(l)];
    setup.b.push_back(bi);
  }
  return setup;
}

KwDimensions kw_dimensions(const MinimalSetup& setup) {
  KwDimensions kw;
  int ge_even = 0, ge_odd = 0;
  auto count = [&](const Vec& v) { (parity_of(setup.alg, v) == 0 ? ge_even : ge_odd)++; };
  for (const Vec& v : setup.ge0) count(v);
  for (const Vec& v : setup.ge1) count(v);
  count(setup.triple.e);
  kw.d0 = setup.alg.dim_even() - ge_even;
  kw.d1 = setup.alg.dim_odd() - ge_odd;
  kw.d0_even = kw.d0 % 2 == 0;
  kw.exp_p = kw.d0 / 2;
  kw.exp_2 = (kw.d1 + 1) / 2;
  kw.parity_r = setup.r % 2;
  kw.parity_matches = (setup.r % 2) == (kw.d1 % 2);
  return kw;
}

std::string setup_summary(const MinimalSetup& setup) {
  std::ostringstream os;
  const KwDimensions kw = kw_dimensions(setup);
  os << "grading dims:";
  for (int i = -2; i <= 2; ++i) os << " g(" << i << ")=" << setup.grading.dim(i);
  os << "\n";
  os << "s=" << setup.s << " r=" << setup.r << " dim g^e(0)=" << setup.ge0.size() << " dim g^e(1)=" << setup.ge1.size()
     << "\n";
  os << "d0=" << kw.d0 << " d1=" << kw.d1 << " bound=p^" << kw.exp_p << "*2^" << kw.exp_2
     << " (2-exponent is ceil(d1/2))\n";
  return os.str();
}

}  // namespace wsuper
