#pragma once

// Word labelled oriented graphs, their presentations, component/forest
// decompositions, fundamental-loop label images and multiplier reports.

#include <optional>
#include <string>
#include <vector>

#include "wlog/homology.hpp"
#include "wlog/words.hpp"

namespace wlog {

struct WlogVertex {
  std::string name;
  std::optional<Word> definingWord;  // metadata for derived vertices
};

struct WlogEdge {
  int origin = -1;
  int terminus = -1;
  Word label;          // non-empty, over the vertex alphabet
  std::string source;  // provenance tag, may be empty
};

/// Oriented graph whose edges carry non-empty words over the vertex
/// alphabet; loops and parallel edges are allowed.
class WlogGraph {
 public:
  WlogGraph() = default;
  explicit WlogGraph(std::vector<WlogVertex> vertices);

  int vertexCount() const { return static_cast<int>(vertices_.size()); }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  const std::vector<WlogVertex>& vertices() const { return vertices_; }
  const std::vector<WlogEdge>& edges() const { return edges_; }
  const Alphabet& alphabet() const { return alphabet_; }
  int vertexIndex(const std::string& name) const { return alphabet_.indexOf(name); }

  void addEdge(int origin, int terminus, Word label, std::string source = "");
  void addEdge(const std::string& origin, const std::string& terminus, Word label,
               std::string source = "");

  bool isLoop(int edgeId) const {
    return edges_.at(edgeId).origin == edges_.at(edgeId).terminus;
  }
  long loopCount() const;

 private:
  std::vector<WlogVertex> vertices_;
  std::vector<WlogEdge> edges_;
  Alphabet alphabet_;
};

struct Presentation {
  Alphabet generators;
  std::vector<Word> relators;
  std::vector<std::string> provenance;  // one tag per relator
  std::vector<std::string> warnings;
};

/// One generator per vertex, one relator o(e) l(e) t(e)^-1 l(e)^-1 per edge.
/// Defining words are not substituted. Relators that reduce to the empty
/// word are kept and flagged in the warnings.
Presentation presentation(const WlogGraph& w);

inline ComplexHomology presentation_complex_homology(const Presentation& p) {
  return complex_homology(p.generators.size(), p.relators);
}

struct ComponentDecomposition {
  struct Component {
    std::vector<int> vertices;
    int base = -1;  // lexicographically least vertex
  };
  std::vector<Component> components;
  std::vector<int> componentOf;   // vertex -> component index
  std::vector<int> forestEdges;   // edge ids
  std::vector<int> extraLoops;    // non-forest loops, declaration order
  std::vector<int> extraNonLoops; // non-forest non-loops, declaration order
  std::vector<int> parentVertex;  // forest parent, -1 at bases
  std::vector<int> parentEdge;    // forest edge towards parent, -1 at bases
};

/// Undirected connectivity ignoring labels; one spanning forest grown
/// depth-first from the lexicographically least vertex of each component,
/// neighbours visited in lexicographic order.
ComponentDecomposition components_and_forest(const WlogGraph& w);

struct FundamentalLoop {
  int component = -1;
  int edgeId = -1;
};

/// One fundamental loop per non-forest edge, in edge declaration order.
std::vector<FundamentalLoop> fundamental_loops(const WlogGraph& w,
                                               const ComponentDecomposition& d);

/// Label image of the fundamental loop of a non-forest edge e:
/// pathWord(base -> o(e)) * label(e) * pathWord(base -> t(e))^-1, reduced,
/// where a forest path's word is the product of its labels with orientation
/// signs.
Word lambda_image(const WlogGraph& w, const ComponentDecomposition& d, int edgeId);

struct SuspensionReport {
  AbelianGroupDescriptor expectedH1, actualH1;
  long expectedH2FreeRank = 0, actualH2FreeRank = 0;
  bool pass = false;
};

/// The presentation 2-complex of a WLOG has the homology of the suspension
/// of (graph + point): H1 = Z^c and free H2 of rank |E| - |V| + c.
SuspensionReport suspension_check(const WlogGraph& w);

struct MultiplierGenerator {
  std::string baseVertex;
  Word loopWord;        // label image of the fundamental loop
  Word commutatorWord;  // [loopWord, baseVertex]
  int sourceEdge = -1;
};

struct ComponentCountCheck {
  long computed = 0;
  long paperFormula = 0;
  bool agree = false;
};

struct OracleRecord {
  SuspensionReport suspension;

  bool exteriorApplicable = false;
  long exteriorRank = -1;
  long exteriorTarget = -1;
  bool exteriorAgrees = true;
  bool exteriorSubstituted = false;  // BB: computed on substituted relators
  long exteriorFilteredRank = -1;    // evidence only, commutator relators
  std::string exteriorNote;

  std::optional<AbelianGroupDescriptor> substitutedAbelianization;
  std::optional<AbelianGroupDescriptor> expectedAbelianization;
  bool abelianizationAgrees = true;

  bool skippedSpanVerified = true;

  std::optional<ComponentCountCheck> componentCheck;

  bool allAgree() const;
};

struct MultiplierReport {
  long h2RankClaim = 0;
  long b0RankClaim = 0;
  std::vector<MultiplierGenerator> h2Generators;
  std::vector<MultiplierGenerator> b0Generators;
  OracleRecord oracle;
};

/// Rank claims and generator words from the decomposition: H2 rank is the
/// number of non-forest edges, B0 rank the number of non-forest non-loops.
/// Fills the suspension oracle and, when every relator has zero exponent
/// sum, the raw exterior rank.
MultiplierReport multiplier_report(const WlogGraph& w);

}  // namespace wlog
