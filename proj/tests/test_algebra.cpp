#include "catch_amalgamated.hpp"

#include "wsuper/families.hpp"
#include "wsuper/linalg.hpp"
#include "wsuper/table_io.hpp"

#include "fixtures.hpp"

#include <json.hpp>

using namespace wsuper;

TEST_CASE("exact linear algebra", "[linalg]") {
  Mat a(3, 3);
  a << 1, 2, 3, 4, 5, 6, 7, 8, 10;
  CHECK(determinant(a) == -3);
  const Mat inv = inverse(a);
  CHECK(is_zero(Mat(a * inv - Mat::Identity(3, 3))));

  Mat s(2, 3);
  s << 1, 2, 3, 2, 4, 6;
  CHECK(rank(s) == 1);
  const Mat ns = nullspace(s);
  CHECK(ns.cols() == 2);
  CHECK(is_zero(Mat(s * ns)));
  CHECK_THROWS_AS(inverse(s.leftCols(2).topRows(2)), AlgebraError);

  Vec b(2);
  b << 1, 3;
  CHECK_FALSE(solve(s, b).has_value());
  CHECK(parse_scalar("-3/6") == Scalar(-1, 2));
  CHECK_THROWS_AS(parse_scalar("1/0"), InputError);
  CHECK_THROWS_AS(parse_scalar("abc"), InputError);
}

TEST_CASE("family dimensions match independent counts", "[families]") {
  SECTION("psl(2|2): supertraceless 4x4 matrices modulo the identity") {
    std::vector<Mat> all;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) all.push_back(elementary(4, i, j));
    // str(E_ij) is delta_ij times the block sign; the supertraceless subspace is its kernel
    Mat str_row(1, 16);
    for (int k = 0; k < 16; ++k) str_row(0, k) = supertrace(all[static_cast<size_t>(k)], 2);
    const Eigen::Index sl_dim = nullspace(str_row).cols();
    CHECK(sl_dim == 15);
    const AlgebraSpec spec{Family::psl22, 2, 2, {}};
    CHECK(build_algebra(spec).dim() == sl_dim - 1);
  }
  SECTION("osp(m|n) has dim so(m) + sp(n) + mn") {
    for (auto [m, n] : {std::pair{1, 2}, std::pair{3, 2}, std::pair{2, 2}, std::pair{1, 4}}) {
      const AlgebraSpec spec{Family::osp, m, n, {}};
      const SuperAlgebra alg = build_algebra(spec);
      CHECK(alg.dim() == m * (m - 1) / 2 + n * (n + 1) / 2 + m * n);
      CHECK(alg.dim_odd() == m * n);
    }
  }
  SECTION("gl and sl") {
    CHECK(build_algebra({Family::gl, 2, 2, {}}).dim() == 16);
    CHECK(build_algebra({Family::sl, 2, 1, {}}).dim() == 8);
    CHECK(build_algebra({Family::sl, 3, 1, {}}).dim() == 15);
    CHECK_THROWS_AS(build_algebra({Family::sl, 2, 2, {}}), InputError);
    CHECK_THROWS_AS(build_algebra({Family::osp, 1, 3, {}}), InputError);
  }
}

TEST_CASE("gl(2|2) odd bracket is the matrix anticommutator", "[families]") {
  const AlgebraSpec spec{Family::gl, 2, 2, {}};
  const MatrixRealization real = matrix_realization(spec);
  const SuperAlgebra alg = build_algebra(spec);
  // upper-right block entry (1,1) and lower-left block entry (1,1)
  const Mat x = elementary(4, 0, 2), y = elementary(4, 2, 0);
  const Mat anti = x * y + y * x;
  CHECK(anti == Mat(elementary(4, 0, 0) + elementary(4, 2, 2)));
  CHECK(bracket(alg, real.coordinates(x), real.coordinates(y)) == real.coordinates(anti));
}

TEST_CASE("catalog algebras satisfy every axiom", "[families]") {
  for (const auto& spec : verification_catalog()) {
    const SuperAlgebra alg = build_algebra(spec);
    const AlgebraCheck chk = check_algebra(alg);
    INFO(spec_label(spec) << ": " << chk.first_failure());
    CHECK(chk.ok());
    // the form is non-degenerate independently of check_algebra
    CHECK(determinant(alg.form()) != 0);
  }
}

TEST_CASE("psl(2|2) triple and Gram matrix", "[families]") {
  const MatrixRealization real = matrix_realization({Family::psl22, 2, 2, {}});
  const SuperAlgebra alg = build_algebra({Family::psl22, 2, 2, {}});
  const Vec e = real.coordinates(elementary(4, 0, 1));
  const Vec f = real.coordinates(elementary(4, 1, 0));
  const Vec h = real.coordinates(Mat(elementary(4, 0, 0) - elementary(4, 1, 1)));
  CHECK(bracket(alg, e, f) == h);
  CHECK(bracket(alg, h, e) == Vec(2 * e));
  CHECK(form(alg, e, f) == 1);
  CHECK(form(alg, h, h) == 2);
  // identity matrix is in the kernel: its coordinates vanish
  CHECK(is_zero(real.coordinates(Mat::Identity(4, 4))));
}

TEST_CASE("structure-constant tables", "[table]") {
  SECTION("export then import reproduces the algebra") {
    for (const auto& spec : verification_catalog()) {
      const SuperAlgebra alg = build_algebra(spec);
      const std::string doc = export_table(alg);
      const SuperAlgebra back = import_table(doc);
      CHECK(back.dim() == alg.dim());
      CHECK(back.parities() == alg.parities());
      CHECK(back.labels() == alg.labels());
      CHECK(back.form() == alg.form());
      for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j) CHECK(back.bracket_basis(i, j) == alg.bracket_basis(i, j));
      CHECK(export_table(back) == doc);
    }
  }
  SECTION("hand-written osp(1|2) table passes validation") {
    const SuperAlgebra alg = import_table(osp12_table());
    CHECK(alg.dim() == 5);
    CHECK(alg.dim_odd() == 2);
    CHECK(check_algebra(alg).ok());
  }
  SECTION("missing form") {
    auto j = nlohmann::json::parse(export_table(build_algebra({Family::osp, 1, 2, {}})));
    j.erase("form");
    CHECK_THROWS_WITH(import_table(j.dump()), Catch::Matchers::ContainsSubstring("missing 'form'"));
  }
  SECTION("malformed documents are input errors") {
    CHECK_THROWS_AS(import_table("{"), InputError);
    CHECK_THROWS_AS(import_table(R"({"dim": 2})"), InputError);
    CHECK_THROWS_AS(import_table(R"({"dim":1,"parity":[0],"brackets":[{"i":0,"j":0,"terms":[{"k":5,"num":"1","den":"1"}]}],"form":[]})"),
                    InputError);
  }
  SECTION("parity violation names its witness") {
    // [x1, x1] = x1 with x1 odd violates additivity
    const char* doc = R"({"name":"bad","dim":2,"parity":[0,1],
      "brackets":[{"i":1,"j":1,"terms":[{"k":1,"num":"1","den":"1"}]}],
      "form":[{"i":0,"j":0,"num":"1","den":"1"},{"i":1,"j":1,"num":"1","den":"1"}]})";
    CHECK_THROWS_WITH(import_table(doc), Catch::Matchers::ContainsSubstring("parity additivity") &&
                                             Catch::Matchers::ContainsSubstring("(1,1,1)"));
  }
}
