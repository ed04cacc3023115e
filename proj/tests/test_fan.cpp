#include <doctest.h>

#include "tautilt/export.hpp"
#include "tautilt/fan.hpp"
#include "tautilt/zoo.hpp"

using namespace tautilt;

namespace {

ExchangeGraph explored(const char* name, int budget = 100000) {
  auto a = build_algebra<Rat>(preset(name));
  MutationContext ctx(a);
  return explore(ctx, ctx.projective_pair(), budget);
}

}  // namespace

TEST_CASE("cone membership trichotomy on the positive orthant") {
  Cone c;
  c.gens = {GVec{1, 0}, GVec{0, 1}};
  CHECK(cone_membership(c, {Rat(1), Rat(1)}) == ConePosition::Interior);
  CHECK(cone_membership(c, {Rat(1), Rat(0)}) == ConePosition::Boundary);
  CHECK(cone_membership(c, {Rat(-1), Rat(1)}) == ConePosition::Outside);
  Cone sing;
  sing.gens = {GVec{1, 0}, GVec{2, 0}};
  CHECK_THROWS_AS(cone_membership(sing, {Rat(1), Rat(1)}), SingularCone);
}

TEST_CASE("strict feasibility via Fourier-Motzkin") {
  // x > 0 and -x > 0 cannot both hold
  CHECK_FALSE(strict_system_feasible({{Rat(1)}, {Rat(-1)}}, 1));
  CHECK(strict_system_feasible({{Rat(1)}}, 1));
  // interior of a half-plane pair
  CHECK(strict_system_feasible({{Rat(1), Rat(0)}, {Rat(1), Rat(1)}}, 2));
}

TEST_CASE("fan checks pass on complete preset graphs") {
  for (const char* name :
       {"linear_A:2", "linear_A:3", "cyclic_nakayama:2:2", "cyclic_nakayama:3:2"}) {
    auto g = explored(name);
    REQUIRE(g.complete);
    auto rep = check_fan(g);
    CHECK(rep.ok());
  }
}

TEST_CASE("a duplicated cone is reported as an overlap") {
  auto g = explored("linear_A:2");
  ExchangeGraph broken = g;
  broken.nodes.push_back(broken.nodes[0]);
  broken.nodes.back().key[0][0] += 100;  // fake key, same cone
  // the duplicated node reuses the same g-vectors, so interiors overlap
  bool found = false;
  for (const auto& v : check_fan(broken).violations)
    found = found || v.find("overlap") != std::string::npos;
  CHECK(found);
}

TEST_CASE("coverage of complete fans is total") {
  auto g = explored("linear_A:2");
  auto rep = coverage(g, 400, {}, 1);
  CHECK(rep.excluded == 0);
  CHECK(rep.fraction == Rat(1));
  CHECK(rep.missed.empty());
}

TEST_CASE("coverage of the empty graph is zero") {
  ExchangeGraph g;
  auto rep = coverage(g, 16, {}, 1);
  CHECK(rep.fraction == Rat(0));
}

TEST_CASE("coverage is reproducible for a fixed seed") {
  auto g = explored("linear_A:3");
  auto r1 = coverage(g, 200, {}, 7);
  auto r2 = coverage(g, 200, {}, 7);
  CHECK(r1.inside == r2.inside);
  CHECK(r1.fraction == r2.fraction);
  auto r3 = coverage(g, 200, {}, 8);
  CHECK(r3.samples == 200);  // different seed still runs the full budget
}

TEST_CASE("Kronecker coverage outside the limit-ray exclusion") {
  auto a = build_algebra<Rat>(preset_kronecker());
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 30);
  RayExclusion ex;
  ex.direction = {Rat(1), Rat(-1)};
  ex.radius = Rat(1, 8);  // wide enough for a 30-node exploration
  auto rep = coverage(g, 300, {ex}, 1);
  CHECK(rep.excluded > 0);
  CHECK(rep.fraction == Rat(1));
}

TEST_CASE("chamber containment") {
  auto base = preset_kronecker();
  auto qm = quotient_by_arrow_kill(base, {"b"});
  auto a = build_algebra<Rat>(base);
  auto b = build_algebra<Rat>(qm.quotient);
  MutationContext actx(a), bctx(b);
  auto ga = explore(actx, actx.projective_pair(), 40);
  auto gb = explore(bctx, bctx.projective_pair(), 100);
  REQUIRE(gb.complete);
  REQUIRE(gb.node_count() == 5);

  SUBCASE("all five quotient chambers are witnessed") {
    auto rep = chamber_containment(ga, gb, 24);
    CHECK(rep.all_witnessed());
  }
  SUBCASE("a graph explores itself") {
    auto rep = chamber_containment(gb, gb, 4);
    CHECK(rep.all_witnessed());
  }
  SUBCASE("an unexplored base graph witnesses nothing") {
    ExchangeGraph empty;
    empty.alg = a;
    auto rep = chamber_containment(empty, gb, 4);
    CHECK(rep.unwitnessed == gb.node_count());
  }
  SUBCASE("vertex-count mismatches are rejected") {
    auto c = build_algebra<Rat>(preset_linear_a(3));
    MutationContext cctx(c);
    auto gc = explore(cctx, cctx.projective_pair(), 5);
    CHECK_THROWS_AS(chamber_containment(gc, gb, 4), RankMismatch);
  }
}

TEST_CASE("no sampled direction is interior to two cones") {
  for (const char* name : {"linear_A:2", "linear_A:3"}) {
    auto g = explored(name);
    int dim = g.alg->n;
    for (int k = 0; k < 120; ++k) {
      auto theta = sample_direction(100 + k, dim);
      int interior = 0;
      for (int i = 0; i < g.node_count(); ++i)
        if (cone_membership(node_cone(g, i), theta) == ConePosition::Interior)
          ++interior;
      CHECK(interior <= 1);
    }
  }
}

TEST_CASE("unimodularity of explored cones") {
  for (const char* name : {"linear_A:3", "cyclic_nakayama:3:2", "tilted_A3",
                           "cluster_tilted_A3"}) {
    auto g = explored(name);
    for (int i = 0; i < g.node_count(); ++i) {
      Rat d = cone_det(node_cone(g, i));
      CHECK((d == Rat(1) || d == Rat(-1)));
    }
  }
}

TEST_CASE("graph exports are deterministic") {
  auto g = explored("linear_A:2");
  auto j1 = graph_json(g, 1, 1000).dump(1);
  auto j2 = graph_json(g, 1, 1000).dump(1);
  CHECK(j1 == j2);
  auto d = graph_dot(g);
  CHECK(d.find("n0 --") != std::string::npos);
  CHECK(d.find("(1,0)") != std::string::npos);
}
