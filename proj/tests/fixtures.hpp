#pragma once

// Shared graphs, systems and independent brute-force oracles for the test
// suites. The oracles deliberately avoid the library code paths they check.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wlog/artin.hpp"
#include "wlog/bb.hpp"
#include "wlog/graph.hpp"
#include "wlog/homology.hpp"
#include "wlog/wlog_graph.hpp"
#include "wlog/words.hpp"

namespace fixtures {

using namespace wlog;

using EdgeList = std::vector<std::pair<std::string, std::string>>;

// Six-vertex graph with four triangles, one of them off a pendant-ish edge.
inline SimplicialGraph exampleGraph() {
  return SimplicialGraph({"a1", "a2", "a3", "a4", "a5", "a6"},
                         {{"a1", "a2"},
                          {"a1", "a5"},
                          {"a2", "a3"},
                          {"a2", "a4"},
                          {"a2", "a5"},
                          {"a3", "a4"},
                          {"a4", "a5"},
                          {"a4", "a6"},
                          {"a5", "a6"}});
}

// exampleGraph plus a seventh vertex hanging off a3 and a4.
inline SimplicialGraph internalTriangleGraph() {
  return SimplicialGraph({"a1", "a2", "a3", "a4", "a5", "a6", "a7"},
                         {{"a1", "a2"},
                          {"a1", "a5"},
                          {"a2", "a3"},
                          {"a2", "a4"},
                          {"a2", "a5"},
                          {"a3", "a4"},
                          {"a4", "a5"},
                          {"a4", "a6"},
                          {"a5", "a6"},
                          {"a4", "a7"},
                          {"a3", "a7"}});
}

// The ordered tree used throughout the worked example: generator v_i is the
// i-th listed edge.
inline SpanningTree exampleTree(const SimplicialGraph& g) {
  return SpanningTree(
      g, EdgeList{{"a1", "a2"}, {"a2", "a5"}, {"a2", "a4"}, {"a2", "a3"}, {"a4", "a6"}});
}

inline SimplicialGraph completeGraph(int n) {
  std::vector<std::string> names;
  EdgeList edges;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(names[i], names[j]);
  }
  return SimplicialGraph(names, edges);
}

inline SimplicialGraph pathGraph(int n) {
  std::vector<std::string> names;
  EdgeList edges;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(names[i], names[i + 1]);
  return SimplicialGraph(names, edges);
}

inline SimplicialGraph cycleGraph(int n) {
  std::vector<std::string> names;
  EdgeList edges;
  for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  return SimplicialGraph(names, edges);
}

// Apex adjacent to every vertex of the base graph.
inline SimplicialGraph coneOver(const SimplicialGraph& base, const std::string& apex) {
  std::vector<std::string> names = base.vertexNames();
  names.push_back(apex);
  EdgeList edges;
  for (const auto& [u, v] : base.edges()) {
    edges.emplace_back(base.vertexName(u), base.vertexName(v));
  }
  for (const std::string& v : base.vertexNames()) edges.emplace_back(v, apex);
  return SimplicialGraph(names, edges);
}

// The (5,3,7) triangle system of the worked Artin example.
inline ArtinTitsSystem exampleArtinSystem() {
  SimplicialGraph g({"a1", "a2", "a3"}, {{"a1", "a2"}, {"a1", "a3"}, {"a2", "a3"}});
  // canonical edge order: {a1,a2}, {a1,a3}, {a2,a3}
  return ArtinTitsSystem(g, {5, 3, 7});
}

inline Word parse(const Alphabet& a, const std::string& text) {
  return parse_word(a, text);
}

// Relator-class equality: same cyclic word up to rotation and inversion.
inline bool sameRelator(const Word& a, const Word& b) {
  return cyclic_normal_form(a) == cyclic_normal_form(b);
}

inline bool sameRelatorSet(std::vector<Word> got, std::vector<Word> expected) {
  if (got.size() != expected.size()) return false;
  auto key = [](const Word& w) { return cyclic_normal_form(w).letters(); };
  std::vector<std::vector<Letter>> a, b;
  for (const Word& w : got) a.push_back(key(w));
  for (const Word& w : expected) b.push_back(key(w));
  auto lt = [](const std::vector<Letter>& x, const std::vector<Letter>& y) {
    return std::lexicographical_compare(
        x.begin(), x.end(), y.begin(), y.end(), [](const Letter& p, const Letter& q) {
          return std::tie(p.gen, p.exp) < std::tie(q.gen, q.exp);
        });
  };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  return a == b;
}

// ---- independent oracles ---------------------------------------------------

// Triangle count by direct subset scan.
inline long bruteTriangleCount(const SimplicialGraph& g) {
  long count = 0;
  int n = g.vertexCount();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) ++count;
  return count;
}

// Strict internality by enumerating induced complete subgraphs of size >= 4
// containing the triangle.
inline bool bruteStrictlyInternal(const SimplicialGraph& g, const Triangle& t) {
  int n = g.vertexCount();
  std::vector<int> others;
  for (int v = 0; v < n; ++v) {
    if (std::find(t.v.begin(), t.v.end(), v) == t.v.end()) others.push_back(v);
  }
  for (std::size_t mask = 1; mask < (std::size_t{1} << others.size()); ++mask) {
    std::vector<int> clique(t.v.begin(), t.v.end());
    for (std::size_t k = 0; k < others.size(); ++k) {
      if (mask & (std::size_t{1} << k)) clique.push_back(others[k]);
    }
    if (clique.size() < 4) continue;
    bool complete = true;
    for (std::size_t i = 0; i < clique.size() && complete; ++i) {
      for (std::size_t j = i + 1; j < clique.size() && complete; ++j) {
        if (!g.adjacent(clique[i], clique[j])) complete = false;
      }
    }
    if (complete) return true;
  }
  return false;
}

// Exterior image by the expanded position-pair double loop.
inline ExteriorImage bruteExteriorImage(const Word& w, int n) {
  auto letters = w.expanded();
  ExteriorImage img(n);
  for (std::size_t p = 0; p < letters.size(); ++p) {
    for (std::size_t q = p + 1; q < letters.size(); ++q) {
      auto [i, si] = letters[p];
      auto [j, sj] = letters[q];
      if (i < j) img.add(i, j, static_cast<std::int64_t>(si) * sj);
    }
  }
  return img;
}

// All spanning trees as sorted edge-id sets, by subset enumeration.
inline std::vector<std::vector<int>> bruteSpanningTrees(const SimplicialGraph& g) {
  std::vector<std::vector<int>> out;
  int m = g.edgeCount(), n = g.vertexCount();
  if (n == 0) return out;
  std::vector<int> ids(m);
  for (int i = 0; i < m; ++i) ids[i] = i;
  std::vector<int> subset;
  auto isTree = [&](const std::vector<int>& edges) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto root = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int e : edges) {
      int ru = root(g.edges()[e].first), rv = root(g.edges()[e].second);
      if (ru == rv) return false;
      parent[ru] = rv;
    }
    return true;
  };
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(subset.size()) == n - 1) {
      if (isTree(subset)) out.push_back(subset);
      return;
    }
    if (next >= m) return;
    subset.push_back(next);
    self(self, next + 1);
    subset.pop_back();
    self(self, next + 1);
  };
  rec(rec, 0);
  return out;
}

// Random connected simple graph on the given vertex names.
inline SimplicialGraph randomConnectedGraph(std::mt19937& rng,
                                            const std::vector<std::string>& names,
                                            double edgeProbability) {
  int n = static_cast<int>(names.size());
  while (true) {
    EdgeList edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng) < edgeProbability) edges.emplace_back(names[i], names[j]);
      }
    }
    SimplicialGraph g(names, edges);
    if (g.connected()) return g;
  }
}

// Random tree from a Pruefer-style attachment process.
inline SimplicialGraph randomTree(std::mt19937& rng, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  EdgeList edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(names[pick(rng)], names[i]);
  }
  return SimplicialGraph(names, edges);
}

inline Word randomWord(std::mt19937& rng, int alphabetSize, int maxLen) {
  std::uniform_int_distribution<int> len(0, maxLen);
  std::uniform_int_distribution<int> gen(0, alphabetSize - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> letters;
  int L = len(rng);
  for (int i = 0; i < L; ++i) {
    letters.push_back({gen(rng), sign(rng) ? 1 : -1});
  }
  return reduce(letters);
}

}  // namespace fixtures
