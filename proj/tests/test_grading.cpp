#include "catch_amalgamated.hpp"

#include "wsuper/families.hpp"
#include "wsuper/linalg.hpp"
#include "wsuper/minimal_grading.hpp"

using namespace wsuper;

namespace {

MinimalSetup catalog_setup(const AlgebraSpec& spec) { return build_minimal_setup(build_algebra(spec), catalog_e(spec)); }

// dim of the centralizer of e computed from the kernel of ad e, unrelated to the grading code
int centralizer_dim(const SuperAlgebra& alg, const Vec& e, int parity) {
  const Mat ad = ad_matrix(alg, e);
  std::vector<int> cols;
  for (int i = 0; i < alg.dim(); ++i)
    if (alg.parity(i) == parity) cols.push_back(i);
  Mat restricted(alg.dim(), static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) restricted.col(static_cast<Eigen::Index>(k)) = ad.col(cols[k]);
  return static_cast<int>(nullspace(restricted).cols());
}

}  // namespace

TEST_CASE("minimal setups on the catalog", "[grading]") {
  struct Expect {
    AlgebraSpec spec;
    int s, r, ge0, ge1;
  };
  const std::vector<Expect> cases = {
      {{Family::sl, 2, 1, {}}, 0, 2, 1, 2},
      {{Family::osp, 1, 2, {}}, 0, 1, 0, 1},
      {{Family::psl22, 2, 2, {}}, 0, 4, 3, 4},
      {{Family::osp, 3, 2, {}}, 0, 3, 3, 3},
  };
  for (const auto& c : cases) {
    const MinimalSetup s = catalog_setup(c.spec);
    INFO(spec_label(c.spec));
    CHECK(s.s == c.s);
    CHECK(s.r == c.r);
    CHECK(static_cast<int>(s.ge0.size()) == c.ge0);
    CHECK(static_cast<int>(s.ge1.size()) == c.ge1);
    CHECK(s.grading.dim(2) == 1);
    CHECK(s.grading.dim(-2) == 1);
    // an odd number of odd z's leaves one anisotropic middle vector
    CHECK(s.split_pairing == (s.r % 2 == 0));

    const SuperAlgebra& g = s.alg;
    const auto& t = s.triple;
    CHECK(bracket(g, t.e, t.f) == t.h);
    CHECK(bracket(g, t.h, t.e) == Vec(2 * t.e));
    CHECK(bracket(g, t.h, t.f) == Vec(-2 * t.f));
    CHECK(form(g, t.e, t.f) == 1);
    CHECK(chi(s, t.f) == 1);
    CHECK(chi(s, t.h) == 0);

    // g^e = g^e(0) + g(1) + C e
    const SuperAlgebra& orig = s.original;
    const Vec e_orig = s.to_original(t.e);
    int even = 0, odd = 0;
    for (const auto& v : s.ge0) (*parity_of(g, v) ? odd : even)++;
    for (const auto& w : s.ge1) (*parity_of(g, w) ? odd : even)++;
    CHECK(centralizer_dim(orig, e_orig, 0) == even + 1);
    CHECK(centralizer_dim(orig, e_orig, 1) == odd);

    // duality of the z bases and of the g^e(0) bases
    for (int a = 0; a < s.nz(); ++a)
      for (int b = 0; b < s.nz(); ++b)
        CHECK(pairing(s, s.zdual[static_cast<size_t>(a)], s.z[static_cast<size_t>(b)]) == (a == b ? 1 : 0));
    for (size_t i = 0; i < s.a.size(); ++i)
      for (size_t j = 0; j < s.b.size(); ++j) CHECK(form(g, s.a[i], s.b[j]) == (i == j ? 1 : 0));

    // the adapted table is the original one in new coordinates
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j) {
        const Vec lhs = s.to_original(bracket(g, unit(g.dim(), i), unit(g.dim(), j)));
        const Vec rhs = bracket(orig, s.to_original(unit(g.dim(), i)), s.to_original(unit(g.dim(), j)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("sharp removes the h component", "[grading]") {
  const MinimalSetup s = catalog_setup({Family::psl22, 2, 2, {}});
  const Vec x = s.triple.h + s.ge0[0];
  const Vec y = sharp(s, x);
  CHECK(y == s.ge0[0]);
  CHECK(form(s.alg, y, s.triple.h) == 0);
  CHECK_THROWS_AS(sharp(s, s.triple.e), InputError);
}

TEST_CASE("Kac-Weisfeiler dimensions", "[grading]") {
  for (const auto& spec : verification_catalog()) {
    const MinimalSetup s = catalog_setup(spec);
    const KwDimensions kw = kw_dimensions(s);
    INFO(spec_label(spec));
    // orbit dimensions: dim g - dim g^e per parity
    const Vec e_orig = s.to_original(s.triple.e);
    CHECK(kw.d0 == s.original.dim_even() - centralizer_dim(s.original, e_orig, 0));
    CHECK(kw.d1 == s.original.dim_odd() - centralizer_dim(s.original, e_orig, 1));
    CHECK(kw.d0 % 2 == 0);
    CHECK(kw.parity_matches);
    CHECK(kw.exp_p == kw.d0 / 2);
    CHECK(kw.exp_2 == (kw.d1 + 1) / 2);
  }
}

TEST_CASE("non-minimal or invalid e is rejected", "[grading]") {
  const AlgebraSpec spec{Family::sl, 3, 1, {}};
  const SuperAlgebra alg = build_algebra(spec);
  const MatrixRealization real = matrix_realization(spec);
  // principal nilpotent of sl(3): grading reaches 4
  const Vec principal = real.coordinates(Mat(elementary(4, 0, 1) + elementary(4, 1, 2)));
  CHECK_THROWS(build_minimal_setup(alg, principal));
  CHECK_THROWS(build_minimal_setup(alg, Vec::Zero(alg.dim())));
  // odd element
  CHECK_THROWS(build_minimal_setup(alg, real.coordinates(elementary(4, 0, 3))));
  // catalog e is minimal
  CHECK_NOTHROW(build_minimal_setup(alg, catalog_e(spec)));
}
