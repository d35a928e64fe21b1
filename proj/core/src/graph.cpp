#include "wlog/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace wlog {

SimplicialGraph::SimplicialGraph(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  names_ = std::move(vertices);
  std::sort(names_.begin(), names_.end());
  for (std::size_t i = 1; i < names_.size(); ++i) {
    if (names_[i] == names_[i - 1]) {
      throw InvalidInput("duplicate vertex: " + names_[i]);
    }
  }
  std::map<std::string, int> index;
  for (int i = 0; i < vertexCount(); ++i) index[names_[i]] = i;

  adj_.assign(vertexCount(), std::vector<int>(vertexCount(), -1));
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw InvalidInput("edge endpoint is not a declared vertex: {" + a + "," + b + "}");
    }
    int u = ia->second, v = ib->second;
    if (u == v) throw InvalidInput("loop edge at vertex " + a);
    if (u > v) std::swap(u, v);
    pairs.emplace_back(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i] == pairs[i - 1]) {
      throw InvalidInput("multi-edge {" + names_[pairs[i].first] + "," +
                         names_[pairs[i].second] + "}");
    }
  }
  edges_ = std::move(pairs);
  for (int e = 0; e < edgeCount(); ++e) {
    adj_[edges_[e].first][edges_[e].second] = e;
    adj_[edges_[e].second][edges_[e].first] = e;
  }
}

int SimplicialGraph::vertexIndex(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) {
    throw InvalidInput("unknown vertex: " + name);
  }
  return static_cast<int>(it - names_.begin());
}

bool SimplicialGraph::adjacent(int u, int v) const { return edgeIndex(u, v) >= 0; }

int SimplicialGraph::edgeIndex(int u, int v) const {
  if (u == v) return -1;
  return adj_.at(u).at(v);
}

std::string SimplicialGraph::edgeName(int e) const {
  const auto& [u, v] = edges_.at(e);
  return "{" + names_[u] + "," + names_[v] + "}";
}

std::vector<int> SimplicialGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < vertexCount(); ++u) {
    if (adj_[v][u] >= 0) out.push_back(u);
  }
  return out;
}

int SimplicialGraph::degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

bool SimplicialGraph::connected() const {
  if (vertexCount() == 0) return true;
  std::vector<char> seen(vertexCount(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
    }
  }
  return reached == vertexCount();
}

OrientedEdge canonical_edge(int u, int v) {
  return u < v ? OrientedEdge{u, v} : OrientedEdge{v, u};
}

std::vector<Triangle> triangles(const SimplicialGraph& g) {
  std::vector<Triangle> out;
  int n = g.vertexCount();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) && g.adjacent(b, c)) out.push_back(Triangle{{a, b, c}});
      }
    }
  }
  return out;
}

std::string triangle_name(const SimplicialGraph& g, const Triangle& t) {
  return "{" + g.vertexName(t.v[0]) + "," + g.vertexName(t.v[1]) + "," +
         g.vertexName(t.v[2]) + "}";
}

namespace {

void requireTriangle(const SimplicialGraph& g, const Triangle& t) {
  if (!(t.v[0] < t.v[1] && t.v[1] < t.v[2]) || !g.adjacent(t.v[0], t.v[1]) ||
      !g.adjacent(t.v[0], t.v[2]) || !g.adjacent(t.v[1], t.v[2])) {
    throw InvalidInput("not a triangle of the graph");
  }
}

}  // namespace

SimplicialGraph edge_set_complement(const SimplicialGraph& g, const Triangle& t) {
  requireTriangle(g, t);
  std::vector<std::string> survivors;
  for (int v = 0; v < g.vertexCount(); ++v) {
    int deg = 0;
    for (int u : g.neighbors(v)) {
      bool vInT = std::find(t.v.begin(), t.v.end(), v) != t.v.end();
      bool uInT = std::find(t.v.begin(), t.v.end(), u) != t.v.end();
      if (vInT && uInT) continue;  // a triangle edge, removed
      ++deg;
    }
    if (deg > 0) survivors.push_back(g.vertexName(v));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges()) {
    const std::string &nu = g.vertexName(u), &nv = g.vertexName(v);
    if (std::find(survivors.begin(), survivors.end(), nu) != survivors.end() &&
        std::find(survivors.begin(), survivors.end(), nv) != survivors.end()) {
      edges.emplace_back(nu, nv);
    }
  }
  return SimplicialGraph(survivors, edges);
}

bool is_internal(const SimplicialGraph& g, const Triangle& t) {
  SimplicialGraph comp = edge_set_complement(g, t);
  int commonVertices = 0;
  std::vector<int> inComp(3, -1);
  for (int k = 0; k < 3; ++k) {
    const std::string& name = g.vertexName(t.v[k]);
    auto names = comp.vertexNames();
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) {
      ++commonVertices;
      inComp[k] = static_cast<int>(it - names.begin());
    }
  }
  int commonEdges = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      if (inComp[a] >= 0 && inComp[b] >= 0 && comp.adjacent(inComp[a], inComp[b])) {
        ++commonEdges;
      }
    }
  }
  bool oneVertex = commonVertices == 1 && commonEdges == 0;
  bool oneEdge = commonEdges == 1 && commonVertices == 2;
  return !oneVertex && !oneEdge;
}

bool is_strictly_internal(const SimplicialGraph& g, const Triangle& t) {
  requireTriangle(g, t);
  for (int x = 0; x < g.vertexCount(); ++x) {
    if (std::find(t.v.begin(), t.v.end(), x) != t.v.end()) continue;
    if (g.adjacent(x, t.v[0]) && g.adjacent(x, t.v[1]) && g.adjacent(x, t.v[2])) {
      return true;
    }
  }
  return false;
}

SpanningTree::SpanningTree(const SimplicialGraph& g, std::vector<int> edgeIds)
    : edgeIds_(std::move(edgeIds)) {
  int n = g.vertexCount();
  if (static_cast<int>(edgeIds_.size()) != n - 1) {
    throw InvalidInput("spanning tree must have |V|-1 edges");
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e : edgeIds_) {
    if (e < 0 || e >= g.edgeCount()) throw InvalidInput("tree edge id out of range");
    auto [u, v] = g.edges()[e];
    int ru = root(u), rv = root(v);
    if (ru == rv) throw InvalidInput("tree edges contain a cycle");
    parent[ru] = rv;
  }
  position_.assign(g.edgeCount(), -1);
  for (int i = 0; i < static_cast<int>(edgeIds_.size()); ++i) {
    if (position_[edgeIds_[i]] != -1) throw InvalidInput("repeated tree edge");
    position_[edgeIds_[i]] = i;
  }
}

SpanningTree::SpanningTree(const SimplicialGraph& g,
                           const std::vector<std::pair<std::string, std::string>>& edges)
    : SpanningTree(g, [&] {
        std::vector<int> ids;
        for (const auto& [a, b] : edges) {
          int e = g.edgeIndex(g.vertexIndex(a), g.vertexIndex(b));
          if (e < 0) throw InvalidInput("tree edge {" + a + "," + b + "} is not a graph edge");
          ids.push_back(e);
        }
        return ids;
      }()) {}

bool SpanningTree::contains(int edgeId) const { return position(edgeId) >= 0; }

int SpanningTree::position(int edgeId) const {
  if (edgeId < 0 || edgeId >= static_cast<int>(position_.size())) return -1;
  return position_[edgeId];
}

TriangleClassification classify_triangle(const SimplicialGraph& g,
                                         const SpanningTree& tree, const Triangle& t) {
  requireTriangle(g, t);
  TriangleClassification c;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      if (tree.contains(g.edgeIndex(t.v[a], t.v[b]))) ++c.treeEdgeCount;
    }
  }
  c.strictlyInternal = is_strictly_internal(g, t);
  c.internal = is_internal(g, t);
  c.favourable = c.treeEdgeCount == 2 || c.strictlyInternal;
  return c;
}

long unfavourable_count(const SimplicialGraph& g, const SpanningTree& tree) {
  long n = 0;
  for (const Triangle& t : triangles(g)) {
    if (!classify_triangle(g, tree, t).favourable) ++n;
  }
  return n;
}

namespace {

// Unfavourable count from precomputed triangle data, avoiding the repeated
// strict-internality scans during enumeration.
struct TriangleTable {
  std::vector<std::array<int, 3>> edgeIds;
  std::vector<char> strict;

  explicit TriangleTable(const SimplicialGraph& g) {
    for (const Triangle& t : triangles(g)) {
      edgeIds.push_back({g.edgeIndex(t.v[0], t.v[1]), g.edgeIndex(t.v[0], t.v[2]),
                         g.edgeIndex(t.v[1], t.v[2])});
      strict.push_back(is_strictly_internal(g, t) ? 1 : 0);
    }
  }

  long unfavourable(const std::vector<char>& inTree) const {
    long n = 0;
    for (std::size_t i = 0; i < edgeIds.size(); ++i) {
      if (strict[i]) continue;
      int c = inTree[edgeIds[i][0]] + inTree[edgeIds[i][1]] + inTree[edgeIds[i][2]];
      if (c != 2) ++n;
    }
    return n;
  }
};

SpanningTree bfsTree(const SimplicialGraph& g, int start) {
  std::vector<char> seen(g.vertexCount(), 0);
  std::vector<int> ids;
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ids.push_back(g.edgeIndex(v, u));
        q.push(u);
      }
    }
  }
  std::sort(ids.begin(), ids.end());
  return SpanningTree(g, ids);
}

TreeSearchResult exactSearch(const SimplicialGraph& g, long budget) {
  const int n = g.vertexCount();
  const int m = g.edgeCount();
  TriangleTable table(g);

  std::vector<int> chosen;
  std::vector<char> inTree(m, 0);
  std::vector<int> best;
  long bestCount = -1;
  long enumerated = 0;

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::vector<int>& p, int v) {
    while (p[v] != v) v = p[v] = p[p[v]];
    return v;
  };

  // Include-before-exclude over edges in canonical order visits spanning
  // trees in lexicographic order of their sorted edge sets, so the first
  // minimiser found is the tie-break winner.
  auto rec = [&](auto&& self, int nextEdge, std::vector<int> dsu) -> void {
    if (static_cast<int>(chosen.size()) == n - 1) {
      if (++enumerated > budget) {
        throw BudgetExceeded("spanning tree enumeration exceeded budget");
      }
      long count = table.unfavourable(inTree);
      if (bestCount < 0 || count < bestCount) {
        bestCount = count;
        best = chosen;
      }
      return;
    }
    if (m - nextEdge < n - 1 - static_cast<int>(chosen.size())) return;
    auto [u, v] = g.edges()[nextEdge];
    int ru = root(dsu, u), rv = root(dsu, v);
    if (ru != rv) {
      auto joined = dsu;
      joined[ru] = rv;
      chosen.push_back(nextEdge);
      inTree[nextEdge] = 1;
      self(self, nextEdge + 1, std::move(joined));
      inTree[nextEdge] = 0;
      chosen.pop_back();
    }
    self(self, nextEdge + 1, std::move(dsu));
  };
  rec(rec, 0, parent);

  if (bestCount < 0) throw InvalidInput("graph is not connected");
  return {SpanningTree(g, best), bestCount};
}

TreeSearchResult greedySearch(const SimplicialGraph& g) {
  TriangleTable table(g);
  SpanningTree tree = bfsTree(g, 0);
  std::vector<char> inTree(g.edgeCount(), 0);
  for (int e : tree.edgeIds()) inTree[e] = 1;
  long count = table.unfavourable(inTree);

  bool improved = true;
  while (improved) {
    improved = false;
    for (int f = 0; f < g.edgeCount() && !improved; ++f) {
      if (inTree[f]) continue;
      // swap f against each tree edge on its fundamental cycle
      auto path = tree_path(g, tree, g.edges()[f].first, g.edges()[f].second);
      for (const TreeStep& step : path) {
        int e = g.edgeIndex(step.edge.origin, step.edge.terminus);
        inTree[e] = 0;
        inTree[f] = 1;
        long swapped = table.unfavourable(inTree);
        if (swapped < count) {
          std::vector<int> ids;
          for (int i = 0; i < g.edgeCount(); ++i) {
            if (inTree[i]) ids.push_back(i);
          }
          tree = SpanningTree(g, ids);
          count = swapped;
          improved = true;
          break;
        }
        inTree[f] = 0;
        inTree[e] = 1;
      }
    }
  }
  return {tree, count};
}

}  // namespace

TreeSearchResult favourable_spanning_tree(const SimplicialGraph& g, TreeSearchMode mode,
                                          long budget) {
  if (!g.connected()) throw InvalidInput("graph is not connected");
  if (g.vertexCount() == 0) throw InvalidInput("empty graph");
  if (mode == TreeSearchMode::Exact) return exactSearch(g, budget);
  return greedySearch(g);
}

std::vector<TreeStep> tree_path(const SimplicialGraph& g, const SpanningTree& tree,
                                int u, int v) {
  if (u < 0 || u >= g.vertexCount() || v < 0 || v >= g.vertexCount()) {
    throw InvalidInput("unknown vertex in tree path");
  }
  if (u == v) return {};
  // parent pointers from u over tree edges
  std::vector<int> parent(g.vertexCount(), -1);
  std::vector<char> seen(g.vertexCount(), 0);
  std::queue<int> q;
  q.push(u);
  seen[u] = 1;
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b : g.neighbors(a)) {
      if (!seen[b] && tree.contains(g.edgeIndex(a, b))) {
        seen[b] = 1;
        parent[b] = a;
        q.push(b);
      }
    }
  }
  if (!seen[v]) throw InvalidInput("vertices lie in different tree components");
  std::vector<int> chain{v};
  while (chain.back() != u) chain.push_back(parent[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  std::vector<TreeStep> steps;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    int a = chain[i], b = chain[i + 1];
    OrientedEdge e = canonical_edge(a, b);
    steps.push_back({e, e.origin == a ? 1 : -1});
  }
  return steps;
}

FlagSkeleton flag_two_skeleton(const SimplicialGraph& g) {
  return {g.vertexNames(), g.edges(), triangles(g)};
}

}  // namespace wlog
