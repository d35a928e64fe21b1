#include "wlog/wlog_graph.hpp"

#include <algorithm>
#include <numeric>

namespace wlog {

WlogGraph::WlogGraph(std::vector<WlogVertex> vertices) : vertices_(std::move(vertices)) {
  std::vector<std::string> names;
  names.reserve(vertices_.size());
  for (const WlogVertex& v : vertices_) names.push_back(v.name);
  alphabet_ = Alphabet(std::move(names));
}

void WlogGraph::addEdge(int origin, int terminus, Word label, std::string source) {
  if (origin < 0 || origin >= vertexCount() || terminus < 0 || terminus >= vertexCount()) {
    throw InvalidInput("wlog edge endpoint out of range");
  }
  if (label.empty()) throw InvalidInput("wlog edge labels must be non-empty words");
  edges_.push_back({origin, terminus, std::move(label), std::move(source)});
}

void WlogGraph::addEdge(const std::string& origin, const std::string& terminus,
                        Word label, std::string source) {
  addEdge(alphabet_.indexOf(origin), alphabet_.indexOf(terminus), std::move(label),
          std::move(source));
}

long WlogGraph::loopCount() const {
  long n = 0;
  for (int e = 0; e < edgeCount(); ++e) {
    if (isLoop(e)) ++n;
  }
  return n;
}

Presentation presentation(const WlogGraph& w) {
  Presentation p;
  p.generators = w.alphabet();
  for (int e = 0; e < w.edgeCount(); ++e) {
    const WlogEdge& edge = w.edges()[e];
    if (edge.label.empty()) throw InvalidInput("wlog edge with empty label");
    Word relator = Word::letter(edge.origin) * edge.label *
                   Word::letter(edge.terminus, -1) * edge.label.inverse();
    if (relator.empty()) {
      p.warnings.push_back("relator of edge " + std::to_string(e) + " (" +
                           w.vertices()[edge.origin].name + " -> " +
                           w.vertices()[edge.terminus].name +
                           ") reduces to the empty word");
    }
    p.provenance.push_back(edge.source.empty()
                               ? w.vertices()[edge.origin].name + "->" +
                                     w.vertices()[edge.terminus].name
                               : edge.source);
    p.relators.push_back(std::move(relator));
  }
  return p;
}

ComponentDecomposition components_and_forest(const WlogGraph& w) {
  const int n = w.vertexCount();
  ComponentDecomposition d;
  d.componentOf.assign(n, -1);
  d.parentVertex.assign(n, -1);
  d.parentEdge.assign(n, -1);

  // lexicographic vertex order
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return w.vertices()[a].name < w.vertices()[b].name;
  });

  // incidences sorted by (neighbour name, edge id)
  std::vector<std::vector<std::pair<int, int>>> inc(n);  // (other, edge)
  for (int e = 0; e < w.edgeCount(); ++e) {
    const WlogEdge& edge = w.edges()[e];
    if (edge.origin == edge.terminus) continue;  // loops never enter the forest
    inc[edge.origin].emplace_back(edge.terminus, e);
    inc[edge.terminus].emplace_back(edge.origin, e);
  }
  for (auto& list : inc) {
    std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) {
        return w.vertices()[a.first].name < w.vertices()[b.first].name;
      }
      return a.second < b.second;
    });
  }

  std::vector<char> forestEdge(w.edgeCount(), 0);
  for (int base : order) {
    if (d.componentOf[base] >= 0) continue;
    int comp = static_cast<int>(d.components.size());
    d.components.push_back({{}, base});
    d.componentOf[base] = comp;
    d.components[comp].vertices.push_back(base);
    // depth-first with an explicit iterator stack, so a vertex is claimed by
    // the branch that actually reaches it first
    std::vector<std::pair<int, std::size_t>> stack{{base, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next >= inc[v].size()) {
        stack.pop_back();
        continue;
      }
      auto [u, e] = inc[v][next++];
      if (d.componentOf[u] < 0) {
        d.componentOf[u] = comp;
        d.parentVertex[u] = v;
        d.parentEdge[u] = e;
        forestEdge[e] = 1;
        d.components[comp].vertices.push_back(u);
        stack.emplace_back(u, 0);
      }
    }
    std::sort(d.components[comp].vertices.begin(), d.components[comp].vertices.end());
  }

  for (int e = 0; e < w.edgeCount(); ++e) {
    if (forestEdge[e]) {
      d.forestEdges.push_back(e);
    } else if (w.isLoop(e)) {
      d.extraLoops.push_back(e);
    } else {
      d.extraNonLoops.push_back(e);
    }
  }
  return d;
}

std::vector<FundamentalLoop> fundamental_loops(const WlogGraph& w,
                                               const ComponentDecomposition& d) {
  std::vector<FundamentalLoop> loops;
  for (int e = 0; e < w.edgeCount(); ++e) {
    bool isForest = std::find(d.forestEdges.begin(), d.forestEdges.end(), e) !=
                    d.forestEdges.end();
    if (!isForest) {
      loops.push_back({d.componentOf[w.edges()[e].origin], e});
    }
  }
  return loops;
}

namespace {

// Word of the forest path base -> v (labels with orientation signs).
Word forestPathWord(const WlogGraph& w, const ComponentDecomposition& d, int v) {
  std::vector<std::pair<int, bool>> chain;  // (edge, traversedForward)
  int cur = v;
  while (d.parentVertex[cur] >= 0) {
    int e = d.parentEdge[cur];
    bool forward = w.edges()[e].terminus == cur;
    chain.emplace_back(e, forward);
    cur = d.parentVertex[cur];
  }
  std::reverse(chain.begin(), chain.end());
  Word out;
  for (auto [e, forward] : chain) {
    out *= forward ? w.edges()[e].label : w.edges()[e].label.inverse();
  }
  return out;
}

}  // namespace

Word lambda_image(const WlogGraph& w, const ComponentDecomposition& d, int edgeId) {
  const WlogEdge& e = w.edges().at(edgeId);
  Word head = forestPathWord(w, d, e.origin);
  Word tail = forestPathWord(w, d, e.terminus);
  return head * e.label * tail.inverse();
}

SuspensionReport suspension_check(const WlogGraph& w) {
  ComponentDecomposition d = components_and_forest(w);
  SuspensionReport r;
  r.expectedH1.freeRank = static_cast<long>(d.components.size());
  r.expectedH2FreeRank =
      w.edgeCount() - w.vertexCount() + static_cast<long>(d.components.size());
  ComplexHomology h = presentation_complex_homology(presentation(w));
  r.actualH1 = h.h1;
  r.actualH2FreeRank = h.h2FreeRank;
  r.pass = r.actualH1 == r.expectedH1 && r.actualH2FreeRank == r.expectedH2FreeRank;
  return r;
}

bool OracleRecord::allAgree() const {
  if (!suspension.pass) return false;
  if (exteriorApplicable && !exteriorAgrees) return false;
  if (!abelianizationAgrees) return false;
  if (!skippedSpanVerified) return false;
  if (componentCheck && !componentCheck->agree) return false;
  return true;
}

MultiplierReport multiplier_report(const WlogGraph& w) {
  ComponentDecomposition d = components_and_forest(w);
  MultiplierReport r;
  r.h2RankClaim = static_cast<long>(d.extraLoops.size() + d.extraNonLoops.size());
  r.b0RankClaim = static_cast<long>(d.extraNonLoops.size());

  for (const FundamentalLoop& loop : fundamental_loops(w, d)) {
    MultiplierGenerator gen;
    gen.baseVertex = w.vertices()[d.components[loop.component].base].name;
    gen.loopWord = lambda_image(w, d, loop.edgeId);
    gen.commutatorWord =
        commutator(gen.loopWord, Word::letter(w.vertexIndex(gen.baseVertex)));
    gen.sourceEdge = loop.edgeId;
    r.h2Generators.push_back(gen);
    if (!w.isLoop(loop.edgeId)) r.b0Generators.push_back(gen);
  }

  r.oracle.suspension = suspension_check(w);

  Presentation p = presentation(w);
  bool allZeroSum = true;
  for (const Word& rel : p.relators) {
    auto vec = abelianize(rel, p.generators.size());
    if (!std::all_of(vec.begin(), vec.end(), [](auto c) { return c == 0; })) {
      allZeroSum = false;
      break;
    }
  }
  if (allZeroSum) {
    r.oracle.exteriorApplicable = true;
    r.oracle.exteriorRank = exterior_rank(p.relators, p.generators.size());
    r.oracle.exteriorTarget = r.h2RankClaim;
    r.oracle.exteriorAgrees = r.oracle.exteriorRank == r.oracle.exteriorTarget;
  } else {
    r.oracle.exteriorNote = "mixed relators: exterior bound not applicable";
  }
  return r;
}

}  // namespace wlog
