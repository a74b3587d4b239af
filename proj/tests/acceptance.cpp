// Prints one PASS/FAIL line per acceptance criterion.
// Exit status is 0 when the set of failing criteria equals the --expect-red set (empty by default).

#include "oracles.hpp"
#include "wsuper/families.hpp"
#include "wsuper/relations.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace wsuper;
using Clock = std::chrono::steady_clock;

namespace {

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

RelationsLab catalog_lab(const AlgebraSpec& spec) {
  return RelationsLab(build_minimal_setup(build_algebra(spec), catalog_e(spec)));
}

const AlgebraSpec kPsl22{Family::psl22, 2, 2, {}};

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Outcome c0_is_one() {
  const auto t0 = Clock::now();
  RelationsLab lab = catalog_lab(kPsl22);
  const C0Result& r = lab.c0_result();
  Outcome out;
  if (!r.c0) out.fail("c0 undetermined");
  else if (*r.c0 != 1) out.fail("extracted c0 = " + to_string(*r.c0) + ", expected 1");
  const double secs = since(t0);
  if (secs >= 60) out.fail("took " + std::to_string(secs) + " s");
  if (out.ok) out.detail = "c0 = 1";
  return out;
}

Outcome double_sum_psl22() {
  RelationsLab lab = catalog_lab(kPsl22);
  const MinimalSetup& s = lab.setup();
  Outcome out;
  int pairs = 0;
  for (const auto& w1 : s.ge1)
    for (const auto& w2 : s.ge1) {
      const Scalar p = form(s.alg, bracket(s.alg, w1, w2), s.triple.f);
      if (lab.double_sum(w1, w2) != 4 * p) out.fail("double sum differs from 4([w1,w2],f)");
      if (p.is_zero()) continue;
      ++pairs;
      if (lab.c0_formula(w1, w2) != 1) out.fail("c0_formula = " + to_string(lab.c0_formula(w1, w2)));
    }
  if (out.ok) out.detail = "double sum = 4([w1,w2],f) on all pairs, c0_formula = 1 on " + std::to_string(pairs);
  return out;
}

Outcome relations_catalog() {
  Outcome out;
  std::ostringstream c0s;
  for (const auto& spec : verification_catalog()) {
    RelationsLab lab = catalog_lab(spec);
    for (const auto& r : lab.run({"deg0", "deg01", "central", "c0"}))
      if (!r.passed) out.fail(spec_label(spec) + " " + r.id + ": " + r.witness);
    const C0Result& c = lab.c0_result();
    if (!c.consistent || !c.c0) out.fail(spec_label(spec) + ": no single consistent c0");
    else c0s << " " << spec_label(spec) << "=" << to_string(*c.c0);
  }
  if (out.ok) out.detail = "c0:" + c0s.str();
  return out;
}

Outcome suite_on_catalog(const std::string& id) {
  Outcome out;
  for (const auto& spec : verification_catalog()) {
    RelationsLab lab = catalog_lab(spec);
    const RelationReport r = lab.run({id}).front();
    if (!r.passed) out.fail(spec_label(spec) + ": " + r.witness);
  }
  if (out.ok) out.detail = "all catalog algebras";
  return out;
}

Outcome pbw_oracle() {
  const auto t0 = Clock::now();
  const MinimalSetup s = build_minimal_setup(build_algebra(kPsl22), catalog_e(kPsl22));
  const auto alg = std::make_shared<const SuperAlgebra>(s.alg);
  PbwEngine eng(alg);
  std::vector<int> rank(static_cast<size_t>(alg->dim()));
  std::iota(rank.begin(), rank.end(), 0);
  oracle::Rewriter rw(*alg, rank);
  const std::vector<int> letters = {s.idx_h, s.first_g1, s.idx_e, s.first_z, s.first_z + 1, s.idx_f};
  Outcome out;
  long words = 0;
  std::vector<int> w;
  std::function<void()> rec = [&] {
    ++words;
    if (eng.word(w) != oracle::to_env(rw.normalize(w), alg->dim())) out.fail("mismatch on a length " + std::to_string(w.size()) + " word");
    if (w.size() == 4) return;
    for (int x : letters) {
      w.push_back(x);
      rec();
      w.pop_back();
    }
  };
  rec();
  // full suite on the whole catalog
  for (const auto& spec : verification_catalog()) catalog_lab(spec).run({});
  const double secs = since(t0);
  if (secs >= 600) out.fail("full suite took " + std::to_string(secs) + " s");
  if (out.ok) out.detail = std::to_string(words) + " words agree; full suite " + std::to_string(secs) + " s";
  return out;
}

Outcome pbw_graded() {
  RelationsLab lab = catalog_lab(kPsl22);
  const MinimalSetup& s = lab.setup();
  const int max_deg = 4;
  // Hilbert series of the supersymmetric algebra on g^e with Kazhdan degrees 2, 3, 4
  std::vector<long> series(max_deg + 1, 0);
  series[0] = 1;
  auto multiply_gen = [&](int degree, int parity) {
    std::vector<long> next(series.size(), 0);
    for (int d = 0; d <= max_deg; ++d)
      for (int k = 0; d + k * degree <= max_deg && (parity == 0 || k <= 1); ++k) next[static_cast<size_t>(d + k * degree)] += series[static_cast<size_t>(d)];
    series = next;
  };
  for (const auto& v : s.ge0) multiply_gen(2, *parity_of(s.alg, v));
  for (const auto& w : s.ge1) multiply_gen(3, *parity_of(s.alg, w));
  multiply_gen(4, 0);
  std::ostringstream want;
  want << "graded dims:";
  for (int d = 0; d <= max_deg; ++d) want << " " << d << ":" << series[static_cast<size_t>(d)];

  const RelationReport r = lab.w_pbw_check(max_deg);
  Outcome out;
  if (!r.passed) out.fail(r.witness);
  if (std::find(r.notes.begin(), r.notes.end(), want.str()) == r.notes.end()) out.fail("expected " + want.str());
  if (out.ok) out.detail = want.str();
  return out;
}

Outcome kw_catalog() {
  Outcome out;
  std::ostringstream d;
  for (const auto& spec : verification_catalog()) {
    const MinimalSetup s = build_minimal_setup(build_algebra(spec), catalog_e(spec));
    const KwDimensions kw = kw_dimensions(s);
    if (s.r % 2 != kw.d1 % 2) out.fail(spec_label(spec) + ": parity of r differs from parity of d1");
    if (kw.d0 % 2) out.fail(spec_label(spec) + ": d0 odd");
    if (kw.exp_p != kw.d0 / 2 || kw.exp_2 != (kw.d1 + 1) / 2) out.fail(spec_label(spec) + ": exponents");
    d << " " << spec_label(spec) << "=p^" << kw.exp_p << "*2^" << kw.exp_2;
  }
  if (out.ok) out.detail = "bounds:" + d.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_red;
  app.add_option("--expect-red", expect_red, "criteria known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"psl(2|2) extract_c0 yields 1 in under 60 s", c0_is_one},
      {"psl(2|2) double sum = 4([w1,w2],f) and c0_formula = 1", double_sum_psl22},
      {"generator relations on the catalog with one consistent c0", relations_catalog},
      {"B equals its explicit form and the closed scalar form", [] { return suite_on_catalog("b_closed_form"); }},
      {"identities suite on the catalog", [] { return suite_on_catalog("identities"); }},
      {"PBW engine equals the rewriter; full suite under 10 min", pbw_oracle},
      {"W PBW check at degree 4 on psl(2|2)", pbw_graded},
      {"one-dimensional representation on the catalog", [] { return suite_on_catalog("one_dim_rep"); }},
      {"Kac-Weisfeiler parity and exponents on the catalog", kw_catalog},
  };

  std::set<int> red;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const int id = static_cast<int>(k) + 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << criteria[k].first << " | " << o.detail << "\n";
    if (!o.ok) red.insert(id);
  }
  const std::set<int> expected(expect_red.begin(), expect_red.end());
  std::cout << red.size() << " of " << criteria.size() << " criteria failing";
  if (!expected.empty()) std::cout << (red == expected ? " (exactly the expected set)" : " (differs from the expected set)");
  std::cout << "\n";
  return red == expected ? 0 : 1;
}
