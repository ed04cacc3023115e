#include <doctest.h>

#include "tautilt/rep_ops.hpp"
#include "tautilt/zoo.hpp"

using namespace tautilt;

TEST_CASE("decompose the free module of A_2") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  auto free = direct_sum<Rat>({indec_projective(a, 0), indec_projective(a, 1)});
  auto dec = decompose(free);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 1);
  CHECK(dec[1].second == 1);
}

TEST_CASE("duplicate summands are counted") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  auto p1 = indec_projective(a, 0);
  auto dec = decompose(direct_sum<Rat>({p1, p1}));
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].second == 2);
  CHECK(is_isomorphic_indec(dec[0].first, p1));
}

TEST_CASE("simples are indecomposable") {
  auto a = build_algebra<Rat>(preset_linear_a(3));
  for (int i = 0; i < 3; ++i) {
    auto dec = decompose(simple_module(a, i));
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].second == 1);
  }
}

TEST_CASE("decompose is idempotent on returned summands") {
  auto a = build_algebra<Rat>(preset_cyclic_nakayama(2, 2));
  auto m = direct_sum<Rat>({indec_projective(a, 0), indec_projective(a, 1),
                            simple_module(a, 0)});
  for (auto& [summand, mult] : decompose(m)) {
    auto again = decompose(summand);
    REQUIRE(again.size() == 1);
    CHECK(again[0].second == 1);
    CHECK(is_isomorphic_indec(again[0].first, summand));
  }
}

TEST_CASE("a scrambled direct sum splits back") {
  // conjugate S_1 + S_1 + P(1) by a non-block-diagonal change of basis
  auto a = build_algebra<Rat>(preset_linear_a(2));
  auto m = direct_sum<Rat>(
      {simple_module(a, 0), simple_module(a, 0), indec_projective(a, 0)});
  Mat<Rat> g0(3, 3), g0i(3, 3);
  // an invertible integer matrix and its inverse
  g0.at(0, 0) = 1; g0.at(0, 1) = 1; g0.at(0, 2) = 0;
  g0.at(1, 0) = 0; g0.at(1, 1) = 1; g0.at(1, 2) = 1;
  g0.at(2, 0) = 0; g0.at(2, 1) = 0; g0.at(2, 2) = 1;
  g0i = *inverse(g0);
  ModQ scrambled = m;
  scrambled.mats[0] = g0i * m.mats[0];  // basis change at vertex 1 only
  validate_module(scrambled);
  auto dec = decompose(scrambled);
  int total = 0;
  for (auto& [summand, mult] : dec) total += mult;
  CHECK(total == 3);
  bool found_p1 = false;
  for (auto& [summand, mult] : dec)
    if (summand.dims == std::vector<int>{1, 1}) found_p1 = true;
  CHECK(found_p1);
}

TEST_CASE("non-split residue field is detected, not guessed") {
  // Kronecker regular module with b acting as the companion of t^2 + 1:
  // its endomorphism ring modulo the radical is Q[t]/(t^2+1)
  auto k = build_algebra<Rat>(preset_kronecker());
  ModQ r;
  r.alg = k;
  r.dims = {2, 2};
  Mat<Rat> ma = Mat<Rat>::identity(2);
  Mat<Rat> mb(2, 2);
  mb.at(0, 1) = -1;
  mb.at(1, 0) = 1;
  r.mats = {ma, mb};
  validate_module(r);
  CHECK_THROWS_AS(decompose(r), NonSplitResidue);
}

TEST_CASE("prime-field modules are refused") {
  auto pres = preset_linear_a(2);
  pres.field = FieldDesc::prime(2);
  auto a = build_algebra<Fp<2>>(pres);
  CHECK(a->dim == 3);
  // decompose is a rationals-only operation by contract; the Fp world has
  // no entry point to it, so nothing to check here beyond the build
}
