#include <doctest.h>

#include "tautilt/exchange_graph.hpp"
#include "tautilt/zoo.hpp"

using namespace tautilt;

TEST_CASE("A_2 explores to the pentagon") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 1000);
  CHECK(g.node_count() == 5);
  CHECK(g.edges.size() == 5);
  CHECK(g.complete);
  CHECK(is_connected(g));
  for (int i = 0; i < 5; ++i) CHECK(g.degree(i) == 2);
}

TEST_CASE("k[x]/(x^2) has two pairs and one edge") {
  auto a = build_algebra<Rat>(parse_presentation_string(
      "field Q\nlengthcap 3\nvertex 1\narrow x: 1 -> 1\nrelation 1*x.x\n"));
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 100);
  CHECK(g.node_count() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.complete);
  // the one-point Nakayama preset is the same algebra
  auto l = build_algebra<Rat>(preset_cyclic_nakayama(1, 2));
  CHECK(l->dim == 2);
  MutationContext lctx(l);
  CHECK(explore(lctx, lctx.projective_pair(), 100).node_count() == 2);
}

TEST_CASE("budgeted Kronecker exploration is a path graph") {
  auto a = build_algebra<Rat>(preset_kronecker());
  MutationContext ctx(a);
  const int d = 4;
  auto g = explore(ctx, ctx.projective_pair(), 2 * d + 1);
  CHECK(g.node_count() == 2 * d + 1);
  CHECK_FALSE(g.complete);
  CHECK(g.edges.size() == size_t(2 * d));
  int deg1 = 0, deg2 = 0;
  for (int i = 0; i < g.node_count(); ++i) {
    if (g.degree(i) == 1) ++deg1;
    if (g.degree(i) == 2) ++deg2;
  }
  CHECK(deg1 == 2);
  CHECK(deg2 == 2 * d - 1);
  // the two path endpoints still have an unexplored slot each
  CHECK(g.frontier().size() == 2);
}

TEST_CASE("exploration is deterministic and thread-count independent") {
  auto a = build_algebra<Rat>(preset_linear_a(3));
  MutationContext c1(a), c2(a), c3(a);
  auto g1 = explore(c1, c1.projective_pair(), 1000, 1);
  auto g2 = explore(c2, c2.projective_pair(), 1000, 1);
  auto g3 = explore(c3, c3.projective_pair(), 1000, 4);
  REQUIRE(g1.node_count() == g2.node_count());
  REQUIRE(g1.node_count() == g3.node_count());
  for (int i = 0; i < g1.node_count(); ++i) {
    CHECK(g1.nodes[i].key == g2.nodes[i].key);
    CHECK(g1.nodes[i].key == g3.nodes[i].key);
    CHECK(g1.nodes[i].nbr == g3.nodes[i].nbr);
  }
  REQUIRE(g1.edges.size() == g3.edges.size());
  for (size_t e = 0; e < g1.edges.size(); ++e) {
    CHECK(g1.edges[e].u == g3.edges[e].u);
    CHECK(g1.edges[e].v == g3.edges[e].v);
    CHECK(g1.edges[e].slot_u == g3.edges[e].slot_u);
  }
}

TEST_CASE("exploring from any node yields the same graph") {
  auto a = build_algebra<Rat>(preset_linear_a(3));
  MutationContext ctx(a);
  auto from_free = explore(ctx, ctx.projective_pair(), 10000);
  auto from_bottom = explore(ctx, ctx.make_pair({}, {0, 1, 2}), 10000);
  CHECK(from_free.node_count() == from_bottom.node_count());
  std::set<std::vector<GVec>> k1, k2;
  for (const auto& nd : from_free.nodes) k1.insert(nd.key);
  for (const auto& nd : from_bottom.nodes) k2.insert(nd.key);
  CHECK(k1 == k2);
  CHECK(from_bottom.complete);
  CHECK(from_free.edges.size() == from_bottom.edges.size());
}

TEST_CASE("explore rejects bad budgets and invalid starts") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  MutationContext ctx(a);
  CHECK_THROWS_AS(explore(ctx, ctx.projective_pair(), 0), BadParams);
  auto rigid_short = ctx.make_pair({indec_projective(a, 0)}, {});
  CHECK_THROWS_AS(explore(ctx, rigid_short, 10), NotTauTilting);
}

TEST_CASE("the commutative square algebra explores cleanly") {
  auto pres = parse_presentation_string(
      "field Q\nlengthcap 4\n"
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
      "arrow a: 1 -> 2\narrow b: 2 -> 4\n"
      "arrow c: 1 -> 3\narrow d: 3 -> 4\n"
      "relation 1*a.b - 1*c.d\n");
  auto a = build_algebra<Rat>(pres);
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 10000);
  REQUIRE(g.complete);
  CHECK(is_connected(g));
  for (int i = 0; i < g.node_count(); ++i) CHECK(g.degree(i) == 4);
}

TEST_CASE("connectivity on a split fixture") {
  ExchangeGraph g;
  for (int i = 0; i < 4; ++i) {
    GraphNode nd;
    nd.key = {{GVec{i, 0}}};
    nd.nbr = {};
    g.nodes.push_back(nd);
    g.index[g.nodes.back().key] = i;
  }
  g.edges.push_back(GraphEdge{0, 1, 0, 0});
  g.edges.push_back(GraphEdge{2, 3, 0, 0});
  CHECK_FALSE(is_connected(g));
  g.edges.push_back(GraphEdge{1, 2, 0, 0});
  CHECK(is_connected(g));
  ExchangeGraph single;
  single.nodes.push_back(GraphNode{});
  CHECK(is_connected(single));
}

TEST_CASE("path in the summand-preserving subgraph") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 1000);

  auto free = ctx.projective_pair();
  int from = g.find(free.key());
  REQUIRE(from >= 0);

  PinnedPair pin;
  pin.module_gs = {ctx.module_summand(indec_projective(a, 0)).g};

  SUBCASE("direct edge sharing P(1)") {
    auto other = ctx.mutate(free, 0);  // replaces P(2) by S_1
    int to = g.find(other.key());
    auto path = path_in_subgraph(g, from, to, pin);
    REQUIRE(path.has_value());
    CHECK(path->size() == 2);
  }
  SUBCASE("trivial path") {
    auto path = path_in_subgraph(g, from, from, pin);
    REQUIRE(path.has_value());
    CHECK(path->empty());
  }
  SUBCASE("incomplete graphs are rejected") {
    auto k = build_algebra<Rat>(preset_kronecker());
    MutationContext kctx(k);
    auto kg = explore(kctx, kctx.projective_pair(), 3);
    PinnedPair kp;
    kp.module_gs = {kctx.module_summand(indec_projective(k, 0)).g};
    CHECK_THROWS_AS(path_in_subgraph(kg, 0, 1, kp), IncompleteGraph);
  }
}

TEST_CASE("fac-maximal completion on A_2") {
  auto a = build_algebra<Rat>(preset_linear_a(2));
  MutationContext ctx(a);
  auto g = explore(ctx, ctx.projective_pair(), 1000);

  SUBCASE("pinning P(1) completes to the free pair") {
    PinnedPair pin;
    pin.module_gs = {ctx.module_summand(indec_projective(a, 0)).g};
    int node = fac_maximal_completion(ctx, g, pin);
    CHECK(g.nodes[node].key == ctx.projective_pair().key());
  }
  SUBCASE("a tau-tilting pin completes to itself") {
    auto free = ctx.projective_pair();
    PinnedPair pin;
    for (const auto& s : free.s) pin.module_gs.push_back(s.g);
    int node = fac_maximal_completion(ctx, g, pin);
    CHECK(g.nodes[node].key == free.key());
  }
  SUBCASE("pinning S_1 completes to P(1) + S_1") {
    PinnedPair pin;
    pin.module_gs = {ctx.module_summand(simple_module(a, 0)).g};
    int node = fac_maximal_completion(ctx, g, pin);
    auto expected = ctx.make_pair(
        {indec_projective(a, 0), simple_module(a, 0)}, {});
    CHECK(g.nodes[node].key == expected.key());
  }
  SUBCASE("missing pins are reported") {
    PinnedPair pin;
    pin.module_gs = {GVec{7, 7}};
    CHECK_THROWS_AS(fac_maximal_completion(ctx, g, pin), NoContainingNode);
  }
}

TEST_CASE("the opposite algebra explores to the negated fan") {
  for (const char* name : {"linear_A:3", "tilted_A3", "cyclic_nakayama:3:2"}) {
    auto pres = preset(name);
    auto a = build_algebra<Rat>(pres);
    auto aop = build_algebra<Rat>(opposite(pres));
    MutationContext ctx(a), opctx(aop);
    auto g = explore(ctx, ctx.projective_pair(), 10000);
    auto gop = explore(opctx, opctx.projective_pair(), 10000);
    REQUIRE(g.complete);
    REQUIRE(gop.complete);
    CHECK(g.node_count() == gop.node_count());
    CHECK(g.edges.size() == gop.edges.size());
    std::set<std::vector<GVec>> negated;
    for (const auto& nd : g.nodes) {
      std::vector<GVec> key = nd.key;
      for (auto& gv : key)
        for (auto& c : gv) c = -c;
      std::sort(key.begin(), key.end());
      negated.insert(key);
    }
    std::set<std::vector<GVec>> opkeys;
    for (const auto& nd : gop.nodes) opkeys.insert(nd.key);
    CHECK(negated == opkeys);
  }
}

TEST_CASE("node keys are injective over explored pairs") {
  for (const char* name : {"linear_A:3", "cyclic_nakayama:3:2", "tilted_A3"}) {
    auto a = build_algebra<Rat>(preset(name));
    MutationContext ctx(a);
    auto g = explore(ctx, ctx.projective_pair(), 10000);
    REQUIRE(g.complete);
    CHECK(int(g.index.size()) == g.node_count());
    // two nodes with equal keys would have collided in the index; check the
    // stored pairs also differ structurally
    for (int i = 0; i < g.node_count(); ++i)
      for (int j = i + 1; j < g.node_count(); ++j)
        CHECK(g.nodes[i].key != g.nodes[j].key);
  }
}
