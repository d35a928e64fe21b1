#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "wlog/graph.hpp"

using namespace wlog;
using namespace fixtures;

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(SimplicialGraph({"a", "a"}, {}), InvalidInput);
  CHECK_THROWS_AS(SimplicialGraph({"a", "b"}, {{"a", "a"}}), InvalidInput);
  CHECK_THROWS_AS(SimplicialGraph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidInput);
  CHECK_THROWS_AS(SimplicialGraph({"a", "b"}, {{"a", "c"}}), InvalidInput);
}

TEST_CASE("triangle enumeration") {
  SimplicialGraph g = exampleGraph();
  auto tris = triangles(g);
  REQUIRE(tris.size() == 4);
  CHECK(triangle_name(g, tris[0]) == "{a1,a2,a5}");
  CHECK(triangle_name(g, tris[1]) == "{a2,a3,a4}");
  CHECK(triangle_name(g, tris[2]) == "{a2,a4,a5}");
  CHECK(triangle_name(g, tris[3]) == "{a4,a5,a6}");

  CHECK(triangles(pathGraph(6)).empty());
  CHECK(triangles(completeGraph(5)).size() == 10);
  CHECK(static_cast<long>(triangles(completeGraph(5)).size()) ==
        bruteTriangleCount(completeGraph(5)));
}

TEST_CASE("edge-set complement") {
  SimplicialGraph g = internalTriangleGraph();
  auto find = [&](const char* a, const char* b, const char* c) {
    return Triangle{{g.vertexIndex(a), g.vertexIndex(b), g.vertexIndex(c)}};
  };
  // a7 is isolated by removing its triangle's edges
  SimplicialGraph comp = edge_set_complement(g, find("a3", "a4", "a7"));
  CHECK(comp.vertexCount() == 6);
  const auto& names = comp.vertexNames();
  CHECK(std::find(names.begin(), names.end(), "a7") == names.end());

  // a lone triangle has an empty complement
  SimplicialGraph k3 = completeGraph(3);
  CHECK(edge_set_complement(k3, triangles(k3)[0]).vertexCount() == 0);

  // in K4 every corner keeps its edge to the fourth vertex
  SimplicialGraph k4 = completeGraph(4);
  CHECK(edge_set_complement(k4, triangles(k4)[0]).vertexCount() == 4);

  CHECK_THROWS_AS(edge_set_complement(g, find("a1", "a2", "a3")), InvalidInput);
}

TEST_CASE("internal triangles") {
  SimplicialGraph g = internalTriangleGraph();
  auto find = [&](const char* a, const char* b, const char* c) {
    return Triangle{{g.vertexIndex(a), g.vertexIndex(b), g.vertexIndex(c)}};
  };
  CHECK(is_internal(g, find("a2", "a4", "a5")));
  CHECK(is_internal(g, find("a2", "a3", "a4")));
  CHECK_FALSE(is_internal(g, find("a3", "a4", "a7")));

  SimplicialGraph k4 = completeGraph(4);
  for (const Triangle& t : triangles(k4)) CHECK(is_internal(k4, t));
}

TEST_CASE("strictly internal triangles") {
  SimplicialGraph k4 = completeGraph(4);
  for (const Triangle& t : triangles(k4)) CHECK(is_strictly_internal(k4, t));

  SimplicialGraph g = exampleGraph();
  Triangle t{{g.vertexIndex("a4"), g.vertexIndex("a5"), g.vertexIndex("a6")}};
  CHECK_FALSE(is_strictly_internal(g, t));

  SimplicialGraph k3 = completeGraph(3);
  CHECK_FALSE(is_strictly_internal(k3, triangles(k3)[0]));
}

TEST_CASE("strict internality matches K_n membership on random graphs") {
  std::mt19937 rng(41);
  std::vector<std::string> names;
  for (int i = 1; i <= 8; ++i) names.push_back("r" + std::to_string(i));
  for (int round = 0; round < 40; ++round) {
    SimplicialGraph g = randomConnectedGraph(rng, names, 0.45);
    for (const Triangle& t : triangles(g)) {
      CHECK(is_strictly_internal(g, t) == bruteStrictlyInternal(g, t));
      // strictly internal implies internal
      if (is_strictly_internal(g, t)) CHECK(is_internal(g, t));
    }
  }
}

TEST_CASE("triangle classification") {
  SimplicialGraph g = exampleGraph();
  SpanningTree tree = exampleTree(g);
  auto find = [&](const char* a, const char* b, const char* c) {
    return Triangle{{g.vertexIndex(a), g.vertexIndex(b), g.vertexIndex(c)}};
  };
  auto c1 = classify_triangle(g, tree, find("a1", "a2", "a5"));
  CHECK(c1.treeEdgeCount == 2);
  CHECK(c1.favourable);

  auto c2 = classify_triangle(g, tree, find("a4", "a5", "a6"));
  CHECK(c2.treeEdgeCount == 1);
  CHECK_FALSE(c2.strictlyInternal);
  CHECK_FALSE(c2.favourable);

  // star tree of K4: the opposite triangle has no tree edge yet is favourable
  SimplicialGraph k4 = completeGraph(4);
  SpanningTree star(k4, EdgeList{{"a1", "a2"}, {"a1", "a3"}, {"a1", "a4"}});
  auto c3 = classify_triangle(
      k4, star,
      Triangle{{k4.vertexIndex("a2"), k4.vertexIndex("a3"), k4.vertexIndex("a4")}});
  CHECK(c3.treeEdgeCount == 0);
  CHECK(c3.strictlyInternal);
  CHECK(c3.favourable);
}

TEST_CASE("tree edge count never exceeds two") {
  std::mt19937 rng(17);
  std::vector<std::string> names;
  for (int i = 1; i <= 7; ++i) names.push_back("r" + std::to_string(i));
  for (int round = 0; round < 25; ++round) {
    SimplicialGraph g = randomConnectedGraph(rng, names, 0.5);
    auto result = favourable_spanning_tree(g, TreeSearchMode::Greedy);
    for (const Triangle& t : triangles(g)) {
      CHECK(classify_triangle(g, result.tree, t).treeEdgeCount <= 2);
    }
  }
}

TEST_CASE("favourable spanning tree search") {
  SimplicialGraph g = exampleGraph();
  auto exact = favourable_spanning_tree(g, TreeSearchMode::Exact);
  CHECK(exact.unfavourable == 1);
  // tie-break: lexicographically smallest edge set among the minimisers
  std::vector<std::string> names;
  for (int e : exact.tree.edgeIds()) names.push_back(g.edgeName(e));
  CHECK(names == std::vector<std::string>{"{a1,a2}", "{a2,a3}", "{a2,a4}", "{a2,a5}",
                                          "{a4,a6}"});

  // exhaustive cross-check over every spanning tree
  long best = -1;
  for (const auto& ids : bruteSpanningTrees(g)) {
    long count = unfavourable_count(g, SpanningTree(g, ids));
    if (best < 0 || count < best) best = count;
  }
  CHECK(best == exact.unfavourable);

  // a tree graph is its own spanning tree
  SimplicialGraph path = pathGraph(5);
  auto pathResult = favourable_spanning_tree(path, TreeSearchMode::Exact);
  CHECK(pathResult.unfavourable == 0);
  CHECK(pathResult.tree.edgeIds().size() == 4);

  // every spanning tree of K4 leaves all triangles favourable
  auto k4 = favourable_spanning_tree(completeGraph(4), TreeSearchMode::Exact);
  CHECK(k4.unfavourable == 0);

  CHECK_THROWS_AS(
      favourable_spanning_tree(SimplicialGraph({"a", "b"}, {}), TreeSearchMode::Exact),
      InvalidInput);
  CHECK_THROWS_AS(favourable_spanning_tree(completeGraph(6), TreeSearchMode::Exact, 10),
                  BudgetExceeded);
}

TEST_CASE("greedy never beats exact") {
  std::mt19937 rng(29);
  std::vector<std::string> names;
  for (int i = 1; i <= 7; ++i) names.push_back("r" + std::to_string(i));
  for (int round = 0; round < 20; ++round) {
    SimplicialGraph g = randomConnectedGraph(rng, names, 0.5);
    auto exact = favourable_spanning_tree(g, TreeSearchMode::Exact);
    auto greedy = favourable_spanning_tree(g, TreeSearchMode::Greedy);
    CHECK(greedy.unfavourable >= exact.unfavourable);
  }
}

TEST_CASE("tree paths") {
  SimplicialGraph g = exampleGraph();
  SpanningTree tree = exampleTree(g);
  auto path = tree_path(g, tree, g.vertexIndex("a5"), g.vertexIndex("a4"));
  REQUIRE(path.size() == 2);
  CHECK(path[0].edge == OrientedEdge{g.vertexIndex("a2"), g.vertexIndex("a5")});
  CHECK(path[0].sign == -1);
  CHECK(path[1].edge == OrientedEdge{g.vertexIndex("a2"), g.vertexIndex("a4")});
  CHECK(path[1].sign == 1);

  CHECK(tree_path(g, tree, 0, 0).empty());

  SimplicialGraph p3 = pathGraph(3);
  SpanningTree whole(p3, EdgeList{{"a1", "a2"}, {"a2", "a3"}});
  auto p = tree_path(p3, whole, 0, 2);
  REQUIRE(p.size() == 2);
  CHECK(p[0].sign == 1);
  CHECK(p[1].sign == 1);

  // reversal flips signs and order
  std::mt19937 rng(3);
  for (int round = 0; round < 10; ++round) {
    SimplicialGraph t = randomTree(rng, 8);
    SpanningTree st(t, [&] {
      std::vector<int> ids(t.edgeCount());
      for (int i = 0; i < t.edgeCount(); ++i) ids[i] = i;
      return ids;
    }());
    std::uniform_int_distribution<int> pick(0, t.vertexCount() - 1);
    int u = pick(rng), v = pick(rng);
    auto fwd = tree_path(t, st, u, v);
    auto bwd = tree_path(t, st, v, u);
    REQUIRE(fwd.size() == bwd.size());
    for (std::size_t i = 0; i < fwd.size(); ++i) {
      CHECK(fwd[i].edge == bwd[bwd.size() - 1 - i].edge);
      CHECK(fwd[i].sign == -bwd[bwd.size() - 1 - i].sign);
    }
  }
}

TEST_CASE("flag two-skeleton") {
  FlagSkeleton k3 = flag_two_skeleton(completeGraph(3));
  CHECK(k3.vertices.size() == 3);
  CHECK(k3.edges.size() == 3);
  CHECK(k3.triangles.size() == 1);

  FlagSkeleton ex = flag_two_skeleton(exampleGraph());
  CHECK(ex.vertices.size() == 6);
  CHECK(ex.edges.size() == 9);
  CHECK(ex.triangles.size() == 4);

  FlagSkeleton square = flag_two_skeleton(cycleGraph(4));
  CHECK(square.triangles.empty());
}
