#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "wsuper/families.hpp"
#include "wsuper/minimal_grading.hpp"

#include <numeric>
#include <random>

using namespace wsuper;

namespace {

std::shared_ptr<const SuperAlgebra> psl22_adapted() {
  const AlgebraSpec spec{Family::psl22, 2, 2, {}};
  return std::make_shared<const SuperAlgebra>(build_minimal_setup(build_algebra(spec), catalog_e(spec)).alg);
}

std::vector<int> identity_rank(int n) {
  std::vector<int> r(static_cast<size_t>(n));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

void all_words(const std::vector<int>& letters, int max_len, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> w;
  std::function<void()> rec = [&] {
    fn(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (int x : letters) {
      w.push_back(x);
      rec();
      w.pop_back();
    }
  };
  rec();
}

}  // namespace

TEST_CASE("engine agrees with the free-algebra rewriter on short words", "[pbw]") {
  const auto alg = psl22_adapted();
  PbwEngine eng(alg);
  oracle::Rewriter rw(*alg, identity_rank(alg->dim()));
  // h, two odd g(-1) letters, one odd g(1) letter, e and f
  const MinimalSetup s = build_minimal_setup(build_algebra({Family::psl22, 2, 2, {}}),
                                             catalog_e({Family::psl22, 2, 2, {}}));
  const std::vector<int> letters = {s.idx_h, s.first_g1, s.idx_e, s.first_z, s.first_z + 1, s.idx_f};
  int count = 0;
  all_words(letters, 4, [&](const std::vector<int>& w) {
    ++count;
    const EnvElement got = eng.word(w);
    const EnvElement want = oracle::to_env(rw.normalize(w), alg->dim());
    if (got != want) FAIL("word mismatch at length " << w.size());
  });
  CHECK(count == 1 + 6 + 36 + 216 + 1296);
}

TEST_CASE("basic straightening identities", "[pbw]") {
  const auto alg = psl22_adapted();
  PbwEngine eng(alg);
  const MinimalSetup s = build_minimal_setup(build_algebra({Family::psl22, 2, 2, {}}),
                                             catalog_e({Family::psl22, 2, 2, {}}));
  // f e = e f - h
  const EnvElement fe = eng.word({s.idx_f, s.idx_e});
  const EnvElement want = eng.word({s.idx_e, s.idx_f}) - eng.letter(s.idx_h);
  CHECK(fe == want);
  // odd squares reduce to half brackets
  for (int a = s.first_z; a < s.idx_f; ++a) {
    const EnvElement sq = eng.word({a, a});
    CHECK(sq == Scalar(1, 2) * eng.from_vector(bracket(*alg, unit(alg->dim(), a), unit(alg->dim(), a))));
  }
  // supercommutator of letters is the bracket
  for (int i = 0; i < alg->dim(); ++i)
    for (int j = 0; j < alg->dim(); ++j) {
      const EnvElement c = eng.supercommutator(eng.letter(i), eng.letter(j));
      CHECK(c == eng.from_vector(bracket(*alg, unit(alg->dim(), i), unit(alg->dim(), j))));
    }
}

TEST_CASE("multiplication is associative and order independent", "[pbw]") {
  const auto alg = psl22_adapted();
  PbwEngine eng(alg);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, alg->dim() - 1), len(0, 3), coef(-3, 3);
  auto random_element = [&] {
    EnvElement u;
    for (int t = 0; t < 3; ++t) {
      std::vector<int> w(static_cast<size_t>(len(rng)));
      for (auto& x : w) x = letter(rng);
      u.add(eng.word(w), Scalar(coef(rng)));
    }
    return u;
  };
  // a shuffled letter order yields the same element once brought back to the standard order
  std::vector<int> rank = identity_rank(alg->dim());
  std::shuffle(rank.begin(), rank.end(), rng);
  oracle::Rewriter shuffled(*alg, rank), standard(*alg, identity_rank(alg->dim()));
  for (int trial = 0; trial < 25; ++trial) {
    const EnvElement a = random_element(), b = random_element(), c = random_element();
    CHECK(eng.multiply(eng.multiply(a, b), c) == eng.multiply(a, eng.multiply(b, c)));
    const oracle::Poly via = shuffled.normalize(oracle::concat(oracle::from_env(a), oracle::from_env(b)));
    CHECK(oracle::to_env(standard.normalize(via), alg->dim()) == eng.multiply(a, b));
  }
}

TEST_CASE("Kazhdan degree and rendering", "[pbw]") {
  const auto alg = psl22_adapted();
  PbwEngine eng(alg);
  const MinimalSetup s = build_minimal_setup(build_algebra({Family::psl22, 2, 2, {}}),
                                             catalog_e({Family::psl22, 2, 2, {}}));
  CHECK(kazhdan_degree(eng.letter(s.idx_e), s.grade) == 4);
  CHECK(kazhdan_degree(eng.letter(s.first_z), s.grade) == 1);
  CHECK(kazhdan_degree(eng.word({s.idx_h, s.first_g1}), s.grade) == 5);
  CHECK(kazhdan_degree(EnvElement(), s.grade) == -1);
  EnvElement u = Scalar(3, 2) * eng.word({s.idx_h, s.idx_e});
  u.add(eng.word({s.first_z, s.first_z + 1}), Scalar(-1));
  CHECK(render(*alg, u) == "−z1·z2 + 3/2·h·e");
  CHECK(render(*alg, EnvElement()) == "0");
  CHECK_THROWS_AS(eng.supercommutator(eng.letter(s.idx_h) + eng.letter(s.first_z), eng.letter(s.idx_e)), InputError);
}
