#pragma once

// Artin pipeline: Artin-Tits systems, their WLOG construction and the
// multiplier reports, including the even and right-angled fast paths.

#include <string>
#include <vector>

#include "wlog/graph.hpp"
#include "wlog/wlog_graph.hpp"

namespace wlog {

/// Finite simplicial graph with an edge labelling m >= 2; an absent edge
/// stands for m = infinity.
class ArtinTitsSystem {
 public:
  ArtinTitsSystem() = default;
  ArtinTitsSystem(SimplicialGraph graph, std::vector<int> edgeLabels);

  const SimplicialGraph& graph() const { return graph_; }
  int label(int edgeId) const { return labels_.at(edgeId); }
  const std::vector<int>& labels() const { return labels_; }
  bool allEven() const;
  bool rightAngled() const;
  bool hasOddEdge() const;

 private:
  SimplicialGraph graph_;
  std::vector<int> labels_;  // parallel to graph_.edges()
};

/// One WLOG vertex per Artin generator; per even edge {a_i, a_j}, i < j, a
/// loop at a_i labelled a_j (a_i a_j)^(m/2 - 1); per odd edge an oriented
/// edge a_i -> a_j labelled (a_j a_i)^((m-1)/2).
WlogGraph build_artin_wlog(const ArtinTitsSystem& s);

/// Components of the WLOG counted directly, against the closed-form count:
/// with at least one odd edge, 1 + #{vertices all of whose labels are even
/// or infinite}; for an even system, the order of the graph.
ComponentCountCheck component_count_check(const ArtinTitsSystem& s);

struct ArtinResult {
  WlogGraph wlog;
  MultiplierReport report;
  bool evenFastPath = false;
  std::vector<std::string> notes;
};

/// Builds the WLOG, fills the multiplier report and attaches the component
/// count check. Even systems structurally assert H2 rank = |E| and trivial
/// B0; systems with odd labels report the closed-form rank together with
/// the filtered exterior evidence, which is recorded, not enforced.
ArtinResult artin_invariants(const ArtinTitsSystem& s);

}  // namespace wlog
