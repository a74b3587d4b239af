#pragma once
// Independent reference implementations used only by the tests.

#include "wsuper/enveloping.hpp"
#include "wsuper/super_algebra.hpp"

#include <map>
#include <vector>

namespace oracle {

using wsuper::Scalar;
using Word = std::vector<int>;
using Poly = std::map<Word, Scalar>;

inline void add(Poly& p, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = p.try_emplace(w, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

/// Straightens words in the free algebra by adjacent swaps
///   ab = (-1)^{|a||b|} ba + [a,b],  aa = 1/2 [a,a] (a odd)
/// until letters are nondecreasing in rank[]. Unrelated to the engine's monomial-times-letter recursion.
class Rewriter {
 public:
  Rewriter(const wsuper::SuperAlgebra& alg, std::vector<int> rank) : m_alg(alg), m_rank(std::move(rank)) {}

  const Poly& normalize(const Word& w) {
    if (auto it = m_memo.find(w); it != m_memo.end()) return it->second;
    Poly out;
    size_t i = 0;
    for (; i + 1 < w.size(); ++i) {
      const int a = w[i], b = w[i + 1];
      if (m_rank[static_cast<size_t>(a)] > m_rank[static_cast<size_t>(b)] || (a == b && m_alg.parity(a) == 1)) break;
    }
    if (i + 1 >= w.size()) {
      add(out, w, Scalar(1));
    } else {
      const int a = w[i], b = w[i + 1];
      auto splice = [&](const std::vector<int>& mid) {
        Word x(w.begin(), w.begin() + static_cast<long>(i));
        x.insert(x.end(), mid.begin(), mid.end());
        x.insert(x.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        return x;
      };
      const Scalar half = a == b ? Scalar(1, 2) : Scalar(1);
      if (a != b) {
        const Poly swapped = normalize(splice({b, a}));
        for (const auto& [x, c] : swapped) add(out, x, wsuper::sign(m_alg.parity(a) * m_alg.parity(b)) * c);
      }
      for (const auto& [k, c] : m_alg.bracket_basis(a, b)) {
        const Poly t = normalize(splice({k}));
        for (const auto& [x, d] : t) add(out, x, half * c * d);
      }
    }
    return m_memo.emplace(w, std::move(out)).first->second;
  }

  Poly normalize(const Poly& p) {
    Poly out;
    for (const auto& [w, c] : p)
      for (const auto& [x, d] : normalize(w)) add(out, x, c * d);
    return out;
  }

 private:
  const wsuper::SuperAlgebra& m_alg;
  std::vector<int> m_rank;
  std::map<Word, Poly> m_memo;
};

inline Poly from_env(const wsuper::EnvElement& u) {
  Poly p;
  for (const auto& [m, c] : u.terms()) add(p, m.letters(), c);
  return p;
}

inline wsuper::EnvElement to_env(const Poly& p, int dim) {
  wsuper::EnvElement u;
  for (const auto& [w, c] : p) {
    wsuper::Monomial m(dim);
    for (int x : w) ++m.exp[static_cast<size_t>(x)];
    u.add(m, c);
  }
  return u;
}

inline Poly concat(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [x, c] : a)
    for (const auto& [y, d] : b) {
      Word w = x;
      w.insert(w.end(), y.begin(), y.end());
      add(out, w, c * d);
    }
  return out;
}

/// Reduces modulo the left ideal generated by (f - chi_f): normalizes with f ranked last,
/// then trailing f letters become chi_f.
inline Poly project(Rewriter& rw, const Poly& p, int f, const Scalar& chi_f) {
  Poly out;
  for (const auto& [w, c] : rw.normalize(p)) {
    Word x = w;
    Scalar k = c;
    while (!x.empty() && x.back() == f) {
      x.pop_back();
      k *= chi_f;
    }
    add(out, x, k);
  }
  return out;
}

}  // namespace oracle
