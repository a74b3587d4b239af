#include "wsuper/enveloping.hpp"

#include <sstream>

namespace wsuper {

int Monomial::length() const {
  int n = 0;
  for (auto e : exp) n += e;
  return n;
}

int Monomial::last() const {
  for (int i = static_cast<int>(exp.size()) - 1; i >= 0; --i)
    if (exp[static_cast<size_t>(i)]) return i;
  return -1;
}

std::vector<int> Monomial::letters() const {
  std::vector<int> out;
  for (size_t i = 0; i < exp.size(); ++i)
    for (int k = 0; k < exp[i]; ++k) out.push_back(static_cast<int>(i));
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  const int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a.exp < b.exp;
}

size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  size_t h = 1469598103934665603ull;
  for (auto e : m.exp) h = (h ^ e) * 1099511628211ull;
  return h;
}

EnvElement EnvElement::scalar(int dim, const Scalar& c) {
  EnvElement u;
  u.add(Monomial(dim), c);
  return u;
}

EnvElement EnvElement::monomial(const Monomial& m, const Scalar& c) {
  EnvElement u;
  u.add(m, c);
  return u;
}

Scalar EnvElement::constant_term() const {
  for (const auto& [m, c] : m_terms)
    if (m.empty()) return c;
  return Scalar(0);
}

bool EnvElement::is_scalar() const {
  for (const auto& [m, c] : m_terms)
    if (!m.empty()) return false;
  return true;
}

void EnvElement::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m_terms.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) m_terms.erase(it);
}

void EnvElement::add(const EnvElement& other, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [m, x] : other.m_terms) add(m, c * x);
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
  add(o, Scalar(1));
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
  add(o, Scalar(-1));
  return *this;
}

EnvElement& EnvElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    m_terms.clear();
    return *this;
  }
  for (auto& [m, x] : m_terms) x *= c;
  return *this;
}

int monomial_parity(const SuperAlgebra& alg, const Monomial& m) {
  int p = 0;
  for (size_t i = 0; i < m.exp.size(); ++i) p += m.exp[i] * alg.parity(static_cast<int>(i));
  return p & 1;
}

std::optional<int> element_parity(const SuperAlgebra& alg, const EnvElement& u) {
  std::optional<int> p;
  for (const auto& [m, c] : u.terms()) {
    const int q = monomial_parity(alg, m);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p;
}

std::pair<EnvElement, EnvElement> split_parity(const SuperAlgebra& alg, const EnvElement& u) {
  EnvElement even, odd;
  for (const auto& [m, c] : u.terms()) (monomial_parity(alg, m) ? odd : even).add(m, c);
  return {even, odd};
}

int kazhdan_degree(const Monomial& m, const std::vector<int>& grade) {
  int d = 0;
  for (size_t i = 0; i < m.exp.size(); ++i) d += m.exp[i] * (grade[i] + 2);
  return d;
}

int weight(const Monomial& m, const std::vector<int>& grade) {
  int w = 0;
  for (size_t i = 0; i < m.exp.size(); ++i) w += m.exp[i] * grade[i];
  return w;
}

int kazhdan_degree(const EnvElement& u, const std::vector<int>& grade) {
  int d = -1;
  for (const auto& [m, c] : u.terms()) d = std::max(d, kazhdan_degree(m, grade));
  return d;
}

std::string render(const SuperAlgebra& alg, const EnvElement& u) {
  if (u.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : u.terms()) {
    const bool negative = c < 0;
    const Scalar a = negative ? Scalar(-c) : c;
    if (first)
      os << (negative ? "−" : "");
    else
      os << (negative ? " − " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (size_t i = 0; i < m.exp.size(); ++i) {
      if (!m.exp[i]) continue;
      std::string f = alg.label(static_cast<int>(i));
      if (m.exp[i] > 1) f += "^" + std::to_string(m.exp[i]);
      factors.push_back(f);
    }
    if (a != 1 || factors.empty()) factors.insert(factors.begin(), a.str());
    for (size_t k = 0; k < factors.size(); ++k) os << (k ? "·" : "") << factors[k];
  }
  return os.str();
}

std::string render_vector(const SuperAlgebra& alg, const Vec& v) {
  EnvElement u;
  for (int i = 0; i < alg.dim(); ++i) {
    if (v(i).is_zero()) continue;
    Monomial m(alg.dim());
    m.exp[static_cast<size_t>(i)] = 1;
    u.add(m, v(i));
  }
  return render(alg, u);
}

PbwEngine::PbwEngine(std::shared_ptr<const SuperAlgebra> alg) : m_alg(std::move(alg)) {}

EnvElement PbwEngine::one() const { return EnvElement::scalar(dim(), Scalar(1)); }

EnvElement PbwEngine::letter(int i) const {
  Monomial m(dim());
  m.exp[static_cast<size_t>(i)] = 1;
  return EnvElement::monomial(m);
}

EnvElement PbwEngine::from_vector(const Vec& v) const {
  if (v.size() != dim()) throw InputError("from_vector: dimension mismatch");
  EnvElement out;
  for (int i = 0; i < dim(); ++i)
    if (!v(i).is_zero()) out.add(letter(i), v(i));
  return out;
}

EnvElement PbwEngine::word(const std::vector<int>& letters) {
  EnvElement cur = one();
  for (int x : letters) cur = multiply_letter(cur, x);
  return cur;
}

const EnvElement& PbwEngine::mono_times_letter(const Monomial& m, int x) {
  Key key{m, x};
  if (auto it = m_cache.find(key); it != m_cache.end()) return it->second;

  EnvElement result;
  const int y = m.last();
  const SuperAlgebra& alg = *m_alg;
  if (y < x || (y == x && alg.parity(x) == 0)) {
    Monomial out = m;
    ++out.exp[static_cast<size_t>(x)];
    result.add(out, Scalar(1));
  } else {
    Monomial rest = m;
    --rest.exp[static_cast<size_t>(y)];
    if (y == x) {
      // odd square: y y = 1/2 [y, y]
      for (const auto& [k, c] : alg.bracket_basis(y, y)) result.add(mono_times_letter(rest, k), c / 2);
    } else {
      // rest y x = (-1)^{|x||y|} (rest x) y + rest [y, x]
      const EnvElement rx = mono_times_letter(rest, x);
      const Scalar s = sign(alg.parity(x) * alg.parity(y));
      for (const auto& [n, c] : rx.terms()) result.add(mono_times_letter(n, y), s * c);
      for (const auto& [k, c] : alg.bracket_basis(y, x)) result.add(mono_times_letter(rest, k), c);
    }
  }
  return m_cache.emplace(std::move(key), std::move(result)).first->second;
}

EnvElement PbwEngine::multiply_letter(const EnvElement& u, int x) {
  EnvElement out;
  for (const auto& [m, c] : u.terms()) out.add(mono_times_letter(m, x), c);
  return out;
}

EnvElement PbwEngine::multiply(const EnvElement& u, const EnvElement& v) {
  EnvElement out;
  if (u.is_zero() || v.is_zero()) return out;
  for (const auto& [m, c] : v.terms()) {
    EnvElement cur = u;
    for (int x : m.letters()) cur = multiply_letter(cur, x);
    out.add(cur, c);
  }
  return out;
}

EnvElement PbwEngine::supercommutator(const EnvElement& u, const EnvElement& v) {
  if (u.is_zero() || v.is_zero()) return {};
  const auto pu = element_parity(*m_alg, u), pv = element_parity(*m_alg, v);
  if (!pu || !pv) throw InputError("supercommutator: arguments must be parity-homogeneous");
  EnvElement out = multiply(u, v);
  out.add(multiply(v, u), -sign(*pu * *pv));
  return out;
}

}  // namespace wsuper
