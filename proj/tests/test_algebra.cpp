#include <doctest.h>

#include "tautilt/algebra.hpp"
#include "tautilt/zoo.hpp"

using namespace tautilt;

namespace {

AlgebraPresentation a2() { return preset_linear_a(2); }

AlgebraPresentation loop_square() {
  return parse_presentation_string(
      "field Q\nlengthcap 4\nvertex 1\narrow x: 1 -> 1\nrelation 1*x.x\n");
}

}  // namespace

TEST_CASE("A_2 basis is {e1, e2, a}") {
  auto a = build_algebra<Rat>(a2());
  CHECK(a->dim == 3);
  CHECK(a->basis[0].len == 0);
  CHECK(a->basis[1].len == 0);
  CHECK(a->basis[2].len == 1);
}

TEST_CASE("loop with x^2 truncates to dimension 2") {
  auto a = build_algebra<Rat>(loop_square());
  CHECK(a->dim == 2);
  CHECK(a->witness == 2);
}

TEST_CASE("linear A_3 with relation ab has dimension 5") {
  auto a = build_algebra<Rat>(preset_tilted_a3());
  CHECK(a->dim == 5);
  // no basis class of length 2 survives
  for (const auto& b : a->basis) CHECK(b.len <= 1);
}

TEST_CASE("non-admissible ideal fails loudly") {
  auto pres = parse_presentation_string(
      "field Q\nlengthcap 6\nvertex 1\narrow x: 1 -> 1\n");
  CHECK_THROWS_AS(build_algebra<Rat>(pres), NotAdmissibleWithinCap);
}

TEST_CASE("malformed relations are rejected") {
  auto pres = a2();
  Relation r;
  PathWord w;
  w.source = 0;
  w.arrows = {0};
  r.terms.emplace_back(Rat(1), w);
  pres.relations.push_back(r);  // single path of length 1 in a presentation
  CHECK_THROWS_AS(build_algebra<Rat>(pres), MalformedRelation);
}

TEST_CASE("relation with non-parallel paths is malformed") {
  auto pres = preset_linear_a(3);
  Relation r;
  PathWord p1{0, {0, 1}};  // 1 -> 3
  PathWord p2{0, {0}};     // 1 -> 2
  r.terms.emplace_back(Rat(1), p1);
  r.terms.emplace_back(Rat(1), p2);
  pres.relations.push_back(r);
  CHECK_THROWS_AS(build_algebra<Rat>(pres), MalformedRelation);
}

TEST_CASE("quotient by an arrow: Kronecker mod b is the A_2 path algebra") {
  auto qm = quotient_by_arrow_kill(preset_kronecker(), {"b"});
  auto b = build_algebra<Rat>(qm.quotient);
  CHECK(b->dim == 3);
  CHECK(b->pres.quiver.arrows.size() == 1);
}

TEST_CASE("quotient by single-arrow relation routes through arrow kill") {
  auto pres = preset_kronecker();
  Relation r;
  PathWord w{0, {1}};  // the arrow b
  r.terms.emplace_back(Rat(1), w);
  auto qm = quotient_by_relations(pres, {r});
  auto b = build_algebra<Rat>(qm.quotient);
  CHECK(b->dim == 3);
}

TEST_CASE("quotient by no extra relations is a no-op") {
  auto qm = quotient_by_relations(a2(), {});
  CHECK(qm.quotient == a2());
  CHECK(build_algebra<Rat>(qm.quotient)->dim == 3);
}

TEST_CASE("loop k[x]/(x^3) mod x^2 has dimension 2") {
  auto x3 = parse_presentation_string(
      "field Q\nlengthcap 5\nvertex 1\narrow x: 1 -> 1\nrelation 1*x.x.x\n");
  CHECK(build_algebra<Rat>(x3)->dim == 3);
  Relation r;
  PathWord w{0, {0, 0}};
  r.terms.emplace_back(Rat(1), w);
  auto qm = quotient_by_relations(x3, {r});
  CHECK(build_algebra<Rat>(qm.quotient)->dim == 2);
}

TEST_CASE("quotient dimension never grows") {
  auto base = preset_cyclic_nakayama(3, 3);
  auto a = build_algebra<Rat>(base);
  Relation r;
  PathWord w{0, {0, 1}};
  r.terms.emplace_back(Rat(1), w);
  auto qm = quotient_by_relations(base, {r});
  auto b = build_algebra<Rat>(qm.quotient);
  CHECK(b->dim < a->dim);
}

TEST_CASE("idempotent quotients") {
  SUBCASE("A_2 drop vertex 1 leaves the point algebra") {
    auto qm = quotient_by_idempotent(a2(), {0});
    auto b = build_algebra<Rat>(qm.quotient);
    CHECK(b->dim == 1);
    CHECK(b->n == 1);
  }
  SUBCASE("A_3 with relation ab, drop the middle vertex") {
    auto qm = quotient_by_idempotent(preset_tilted_a3(), {1});
    auto b = build_algebra<Rat>(qm.quotient);
    CHECK(b->n == 2);
    CHECK(b->dim == 2);  // semisimple k x k
    CHECK(b->pres.quiver.arrows.empty());
  }
  SUBCASE("Kronecker drop vertex 2") {
    auto qm = quotient_by_idempotent(preset_kronecker(), {1});
    CHECK(build_algebra<Rat>(qm.quotient)->dim == 1);
  }
  SUBCASE("empty or full sets are rejected") {
    CHECK_THROWS_AS(quotient_by_idempotent(a2(), {}), EmptyOrFullVertexSet);
    CHECK_THROWS_AS(quotient_by_idempotent(a2(), {0, 1}), EmptyOrFullVertexSet);
  }
}

TEST_CASE("structure constants associate on all basis triples") {
  for (const char* name : {"linear_A:3", "cyclic_nakayama:3:2", "tilted_A3",
                           "cluster_tilted_A3"}) {
    auto a = build_algebra<Rat>(preset(name));
    for (int x = 0; x < a->dim; ++x)
      for (int y = 0; y < a->dim; ++y)
        for (int z = 0; z < a->dim; ++z) {
          auto left = a->mult_elem(a->mult(x, y), SparseElem<Rat>{{z, Rat(1)}});
          auto right = a->mult_elem(SparseElem<Rat>{{x, Rat(1)}}, a->mult(y, z));
          CHECK(left == right);
        }
  }
}

TEST_CASE("radical is nilpotent at the witness length") {
  auto a = build_algebra<Rat>(preset_cyclic_nakayama(2, 3));
  CHECK(a->dim == 6);
  CHECK(a->witness == 3);
  // products of `witness` many radical basis classes all vanish
  std::vector<SparseElem<Rat>> rad;
  for (int i = 0; i < a->dim; ++i)
    if (a->basis[i].len >= 1) rad.push_back({{i, Rat(1)}});
  std::vector<SparseElem<Rat>> power = rad;
  for (int k = 1; k < a->witness; ++k) {
    std::vector<SparseElem<Rat>> next;
    for (const auto& x : power)
      for (const auto& y : rad) next.push_back(a->mult_elem(x, y));
    power = next;
  }
  for (const auto& x : power) CHECK(x.empty());
}

TEST_CASE("idempotent quotient equals building the restricted presentation") {
  auto qm = quotient_by_idempotent(preset_linear_a(4), {3});
  auto direct = build_algebra<Rat>(preset_linear_a(3));
  auto via_quotient = build_algebra<Rat>(qm.quotient);
  CHECK(via_quotient->dim == direct->dim);
}

TEST_CASE("mixed-length relations reduce degreewise") {
  // k<x,y> / (xy, yx, x^2 - y^3): basis {1, x, y, y^2, y^3} with x^2 = y^3
  auto pres = parse_presentation_string(
      "field Q\nlengthcap 8\nvertex 1\n"
      "arrow x: 1 -> 1\narrow y: 1 -> 1\n"
      "relation 1*x.y\nrelation 1*y.x\nrelation 1*x.x - 1*y.y.y\n");
  auto a = build_algebra<Rat>(pres);
  CHECK(a->dim == 5);
  CHECK(a->witness == 4);
  // the class of x.x equals the class of y.y.y
  PathWord xx{0, {0, 0}}, yyy{0, {1, 1, 1}};
  CHECK(a->reduce_path(xx) == a->reduce_path(yyy));
  CHECK_FALSE(a->reduce_path(xx).empty());
}

TEST_CASE("commutativity relation with a fractional coefficient") {
  // square quiver with a.b = 2/3 c.d identified in the quotient
  auto pres = parse_presentation_string(
      "field Q\nlengthcap 4\n"
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
      "arrow a: 1 -> 2\narrow b: 2 -> 4\n"
      "arrow c: 1 -> 3\narrow d: 3 -> 4\n"
      "relation 1*a.b - 2/3*c.d\n");
  auto a = build_algebra<Rat>(pres);
  CHECK(a->dim == 9);  // 4 trivial + 4 arrows + one length-2 class
  PathWord ab{0, {0, 1}}, cd{0, {2, 3}};
  auto nf_ab = a->reduce_path(ab);
  auto nf_cd = a->reduce_path(cd);
  REQUIRE(nf_ab.size() == 1);
  REQUIRE(nf_cd.size() == 1);
  CHECK(nf_ab[0].first == nf_cd[0].first);
  CHECK(nf_ab[0].second == Rat(2, 3) * nf_cd[0].second);
}

TEST_CASE("opposite of opposite is the identity on presentations") {
  for (const char* name : {"linear_A:3", "kronecker", "cyclic_nakayama:3:2",
                           "tilted_A3"}) {
    auto pres = preset(name);
    CHECK(opposite(opposite(pres)) == pres);
  }
}
