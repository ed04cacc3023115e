#include <doctest.h>

#include "tautilt/reduction.hpp"
#include "tautilt/zoo.hpp"

using namespace tautilt;

TEST_CASE("endomorphism presentation of the free module recovers A") {
  for (const char* name : {"linear_A:2", "linear_A:3", "cyclic_nakayama:2:2",
                           "tilted_A3"}) {
    auto a = build_algebra<Rat>(preset(name));
    std::vector<ModQ> parts;
    for (int i = 0; i < a->n; ++i) parts.push_back(indec_projective(a, i));
    auto endp = present_endomorphism_summands(parts);
    auto e = build_algebra<Rat>(endp.pres);
    CHECK(e->n == a->n);
    CHECK(e->dim == a->dim);
    CHECK(e->pres.quiver.arrows.size() == a->pres.quiver.arrows.size());
  }
}

TEST_CASE("endomorphism presentation of P(1) + S_1 over A_2") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  auto endp = present_endomorphism_summands(
      {indec_projective(a, 0), simple_module(a, 0)});
  CHECK(endp.pres.quiver.n() == 2);
  CHECK(endp.pres.quiver.arrows.size() == 1);
  CHECK(endp.pres.relations.empty());
  CHECK(build_algebra<Rat>(endp.pres)->dim == 3);
}

TEST_CASE("endomorphism presentation of a simple is the point algebra") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  auto pres = present_endomorphism_algebra(simple_module(a, 0));
  CHECK(pres.quiver.n() == 1);
  CHECK(pres.quiver.arrows.empty());
}

TEST_CASE("repeated summands are rejected") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  auto p1 = indec_projective(a, 0);
  CHECK_THROWS_AS(present_endomorphism_algebra(direct_sum<Rat>({p1, p1})),
                  NotBasic);
}

TEST_CASE("tau-reduction of A_2 at (P(1), 0)") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 1000);
  PinnedPair pin;
  pin.module_gs = {ctx.module_summand(indec_projective(a, 0)).g};
  auto red = tau_reduction(ctx, g, pin);
  CHECK(red.b->n == 1);
  CHECK(red.b->dim == 1);
  CHECK(red.node_map.size() == 2);

  // the reduced graph has exactly the two pairs of the point algebra
  MutationContext bctx(red.b);
  auto bg = explore(bctx, bctx.projective_pair(), 100);
  CHECK(bg.node_count() == 2);
  for (const auto& [ak, bk] : red.node_map) CHECK(bg.find(bk) >= 0);
}

TEST_CASE("tau-reduction at a shifted projective pin") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 1000);
  PinnedPair pin;
  pin.projs = {0};
  auto red = tau_reduction(ctx, g, pin);
  CHECK(red.b->n == 1);
  CHECK(red.node_map.size() == 2);
}

TEST_CASE("reducing at a full tau-tilting pair is refused") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 1000);
  PinnedPair pin;
  for (const auto& s : ctx.projective_pair().s) pin.module_gs.push_back(s.g);
  CHECK_THROWS_AS(tau_reduction(ctx, g, pin), PresentationFailure);
}

TEST_CASE("reduction on incomplete graphs is refused") {
  auto k = build_algebra<Rat>(preset_kronecker());
  MutationContext ctx(k);
  auto g = explore(ctx, ctx.projective_pair(), 3);
  PinnedPair pin;
  pin.module_gs = {ctx.module_summand(indec_projective(k, 0)).g};
  CHECK_THROWS_AS(tau_reduction(ctx, g, pin), IncompleteGraph);
}

TEST_CASE("A_4 reduced at (P(1), 0) mirrors the full A_3 graph") {
  auto a = build_algebra<Rat>(preset_linear_a(4));
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 10000);
  PinnedPair pin;
  pin.module_gs = {ctx.module_summand(indec_projective(a, 0)).g};
  auto red = tau_reduction(ctx, g, pin);
  CHECK(red.b->n == 3);
  CHECK(red.b->dim == 6);
  MutationContext bctx(red.b);
  auto bg = explore(bctx, bctx.projective_pair(), 10000);
  CHECK(bg.node_count() == 14);
  CHECK(int(red.node_map.size()) == 14);

  auto a3 = build_algebra<Rat>(preset_linear_a(3));
  MutationContext ctx3(a3);
  auto g3 = explore(ctx3, ctx3.projective_pair(), 10000);
  CHECK(g3.node_count() == bg.node_count());
}

TEST_CASE("reduction verifies at non-projective and mixed pins") {
  auto a = build_algebra<Rat>(preset_linear_a(3));
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 10000);
  REQUIRE(g.complete);

  auto verify = [&](const PinnedPair& pin, int expect_rank) {
    auto red = tau_reduction(ctx, g, pin);
    CHECK(red.b->n == expect_rank);
    MutationContext bctx(red.b);
    auto bg = explore(bctx, bctx.projective_pair(), 10000);
    REQUIRE(bg.complete);
    CHECK(bg.node_count() == int(red.node_map.size()));
    std::set<std::pair<int, int>> bedges;
    for (const auto& e : bg.edges)
      bedges.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    int sub = 0;
    for (const auto& e : g.edges) {
      auto ku = g.nodes[e.u].key, kv = g.nodes[e.v].key;
      if (!red.node_map.count(ku) || !red.node_map.count(kv)) continue;
      ++sub;
      int bu = bg.find(red.node_map.at(ku));
      int bv = bg.find(red.node_map.at(kv));
      CHECK(bedges.count({std::min(bu, bv), std::max(bu, bv)}) == 1);
    }
    CHECK(sub == int(bg.edges.size()));
  };

  SUBCASE("pin at the non-projective simple S_1") {
    PinnedPair pin;
    pin.module_gs = {ctx.module_summand(simple_module(a, 0)).g};
    verify(pin, 2);
  }
  SUBCASE("pin at the interval module [1,2]") {
    for (const auto& m : oracle_linear_a_indecs(a))
      if (m.dims == std::vector<int>{1, 1, 0}) {
        PinnedPair pin;
        pin.module_gs = {ctx.module_summand(m).g};
        verify(pin, 2);
      }
  }
  SUBCASE("mixed pin: module plus shifted vertex") {
    PinnedPair pin;
    pin.module_gs = {ctx.module_summand(simple_module(a, 0)).g};
    pin.projs = {2};
    verify(pin, 1);
  }
}

TEST_CASE("A_3 reduction at (P(1), 0): subgraph isomorphic to tau-tilt B") {
  auto a = build_algebra<Rat>(preset_linear_a(3));
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 10000);
  REQUIRE(g.complete);
  PinnedPair pin;
  pin.module_gs = {ctx.module_summand(indec_projective(a, 0)).g};
  auto red = tau_reduction(ctx, g, pin);
  CHECK(red.b->n == 2);

  MutationContext bctx(red.b);
  auto bg = explore(bctx, bctx.projective_pair(), 1000);
  REQUIRE(bg.complete);
  CHECK(bg.node_count() == int(red.node_map.size()));

  // the node map is a bijection sending subgraph edges to edges
  std::set<std::vector<GVec>> image;
  for (const auto& [ak, bk] : red.node_map) {
    CHECK(bg.find(bk) >= 0);
    image.insert(bk);
  }
  CHECK(image.size() == red.node_map.size());

  std::set<std::pair<int, int>> bedges;
  for (const auto& e : bg.edges)
    bedges.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  int sub_edges = 0;
  for (const auto& e : g.edges) {
    auto ku = g.nodes[e.u].key, kv = g.nodes[e.v].key;
    if (!red.node_map.count(ku) || !red.node_map.count(kv)) continue;
    ++sub_edges;
    int bu = bg.find(red.node_map.at(ku));
    int bv = bg.find(red.node_map.at(kv));
    CHECK(bedges.count({std::min(bu, bv), std::max(bu, bv)}) == 1);
  }
  CHECK(sub_edges == int(bg.edges.size()));
}
