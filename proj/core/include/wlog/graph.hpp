#pragma once

// Finite simplicial graphs, triangle classification and the
// favourable-spanning-tree search.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wlog/errors.hpp"

namespace wlog {

/// Finite graph without loops or multi-edges. Vertices are stored in
/// lexicographic order of their names, so vertex indices compare like the
/// names do; edges are canonical (smaller endpoint first) and sorted.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  SimplicialGraph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  int vertexCount() const { return static_cast<int>(names_.size()); }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertexNames() const { return names_; }
  const std::string& vertexName(int v) const { return names_.at(v); }
  int vertexIndex(const std::string& name) const;

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  /// Index into edges() of {u, v}, or -1 when not adjacent.
  int edgeIndex(int u, int v) const;
  std::string edgeName(int e) const;
  /// Neighbours of v in ascending (= lexicographic) order.
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  bool connected() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;  // adjacency matrix of edge ids, -1 = none
};

struct OrientedEdge {
  int origin = -1;
  int terminus = -1;
  bool operator==(const OrientedEdge&) const = default;
};

/// Canonical orientation: origin is the lexicographically smaller endpoint.
OrientedEdge canonical_edge(int u, int v);

struct Triangle {
  std::array<int, 3> v{};  // ascending
  bool operator==(const Triangle&) const = default;
  auto operator<=>(const Triangle&) const = default;
};

/// The 3-cliques of g in lexicographic order of their vertex triples.
std::vector<Triangle> triangles(const SimplicialGraph& g);

std::string triangle_name(const SimplicialGraph& g, const Triangle& t);

/// Drops the three triangle edges, discards the vertices isolated by that
/// removal and returns the induced subgraph of g on the survivors.
/// Throws InvalidInput when t is not a triangle of g.
SimplicialGraph edge_set_complement(const SimplicialGraph& g, const Triangle& t);

/// The intersection of t with its edge-set complement is neither a single
/// vertex nor a single edge.
bool is_internal(const SimplicialGraph& g, const Triangle& t);

/// t is contained in an induced K_n, n >= 4; equivalently some vertex
/// outside t is adjacent to all three corners.
bool is_strictly_internal(const SimplicialGraph& g, const Triangle& t);

/// Ordered edge list forming a spanning tree of the host graph. The order is
/// meaningful: downstream generator names follow it.
class SpanningTree {
 public:
  SpanningTree() = default;
  SpanningTree(const SimplicialGraph& g, std::vector<int> edgeIds);
  SpanningTree(const SimplicialGraph& g,
               const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<int>& edgeIds() const { return edgeIds_; }
  bool contains(int edgeId) const;
  /// Position of edgeId in the tree order, -1 when absent.
  int position(int edgeId) const;

 private:
  std::vector<int> edgeIds_;
  std::vector<int> position_;  // indexed by host edge id
};

struct TriangleClassification {
  int treeEdgeCount = 0;
  bool strictlyInternal = false;
  bool internal = false;
  bool favourable = false;
};

TriangleClassification classify_triangle(const SimplicialGraph& g,
                                         const SpanningTree& tree, const Triangle& t);

/// Number of triangles of g that are unfavourable with respect to tree.
long unfavourable_count(const SimplicialGraph& g, const SpanningTree& tree);

enum class TreeSearchMode { Exact, Greedy };

struct TreeSearchResult {
  SpanningTree tree;
  long unfavourable = 0;
};

/// Exact mode enumerates all spanning trees (throws BudgetExceeded past the
/// budget) and returns a minimiser of the unfavourable-triangle count, ties
/// broken by lexicographically smallest edge set. Greedy mode hill-climbs
/// from a breadth-first tree with single edge swaps.
TreeSearchResult favourable_spanning_tree(const SimplicialGraph& g, TreeSearchMode mode,
                                          long budget = 1'000'000);

struct TreeStep {
  OrientedEdge edge;  // canonical orientation
  int sign = 1;       // +1 when traversed origin -> terminus
};

/// The unique simple tree path from u to v; empty iff u == v.
std::vector<TreeStep> tree_path(const SimplicialGraph& g, const SpanningTree& tree,
                                int u, int v);

struct FlagSkeleton {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<Triangle> triangles;
};

/// 2-skeleton of the flag complex: vertices, edges and all 3-cliques.
FlagSkeleton flag_two_skeleton(const SimplicialGraph& g);

}  // namespace wlog
