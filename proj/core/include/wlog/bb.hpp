#pragma once

// Bestvina-Brady pipeline: the simple-connectivity gate on the flag
// complex, Dicks-Leary and spanning-tree presentations and the WLOG
// construction with per-triangle emission and certified pruning.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wlog/graph.hpp"
#include "wlog/homology.hpp"
#include "wlog/wlog_graph.hpp"

namespace wlog {

enum class GateStatus { Certified, Assumed, Refuted, Unknown };

std::string to_string(GateStatus s);

struct GateResult {
  GateStatus status = GateStatus::Unknown;
  AbelianGroupDescriptor flagH1;
  CertificateStatus certificate = CertificateStatus::Unknown;

  bool passed() const {
    return status == GateStatus::Certified || status == GateStatus::Assumed;
  }
};

/// Refuted when H1 of the flag complex is non-trivial; certified when the
/// bounded trivialiser closes pi_1; otherwise unknown, promoted to assumed
/// iff the caller overrides.
GateResult flag_gate(const SimplicialGraph& g, bool assumeSimplyConnected,
                     long tietzeBudget = 10'000);

/// Generators one per canonically oriented edge; per triangle the relators
/// [e, f] and e f g^-1 of the directed triangle (e: u->v, f: v->w, g: u->w
/// for corners u < v < w). Precondition: the flag gate passed.
Presentation dicks_leary_presentation(const SimplicialGraph& g);

/// Word expression of an oriented edge over the tree-edge generators:
/// product of the tree-path letters from origin to terminus, with traversal
/// signs. Tree edges yield single letters.
Word edge_word(const SimplicialGraph& g, const SpanningTree& tree, OrientedEdge e);

/// Generator names v1..vn following the tree's edge order.
Alphabet tree_alphabet(const SpanningTree& tree);

/// Spanning-tree presentation: generators the tree edges, one commutator
/// relator [w(x), w(y)] per triangle, x and y its lexicographically first
/// two edges. Precondition: the flag gate passed.
Presentation ps_presentation(const SimplicialGraph& g, const SpanningTree& tree);

enum class EmissionAction { EmittedLoop, EmittedVertexAndLoop, Skipped };

struct SkipCertificate {
  int apex = -1;
  std::array<Triangle, 3> flanking;
};

struct EmissionRecord {
  Triangle triangle;
  EmissionAction action = EmissionAction::EmittedLoop;
  std::string placedAt;  // WLOG vertex, empty for skips
  Word label;            // over the WLOG vertex alphabet, empty for skips
  std::optional<SkipCertificate> certificate;
};

struct BBWlogResult {
  WlogGraph wlog;
  std::vector<EmissionRecord> records;
  long skippedCount = 0;
  /// Global recheck: every skipped triangle's exterior image lies in the
  /// integer span of the retained images.
  bool skippedSpanVerified = true;
};

/// Per-triangle emission in canonical order. Triangles with two tree edges
/// put a loop at the earlier tree edge labelled by the other; with one tree
/// edge, a loop there labelled by the shortest non-tree edge word; with
/// none, a fresh vertex named after the least edge carrying its word, plus
/// a loop labelled by the next edge word. A strictly internal triangle with
/// fewer than two tree edges is skipped only under an apex certificate
/// whose three flanking triangles stay retained (or were skipped earlier
/// with closed certificates) and when its exterior image already lies in
/// the retained span.
BBWlogResult build_bb_wlog(const SimplicialGraph& g, const SpanningTree& tree,
                           bool emitAll = false);

/// Replaces derived-vertex letters by their defining words, yielding a word
/// over the tree-edge generators.
Word substitute_defining_words(const WlogGraph& w, const Word& word);

struct BBOptions {
  bool assumeSimplyConnected = false;
  TreeSearchMode treeMode = TreeSearchMode::Exact;
  long treeBudget = 1'000'000;
  bool emitAll = false;
  long tietzeBudget = 10'000;
  /// Skip the search and use this spanning tree (ordered edge list).
  std::optional<SpanningTree> tree;
};

struct BBResult {
  GateResult gate;
  SpanningTree tree;
  long unfavourableCount = 0;
  bool treeSearchFellBack = false;
  BBWlogResult emission;
  MultiplierReport report;
};

/// Full pipeline: gate, favourable tree, WLOG, multiplier report with the
/// substituted exterior-rank and abelianisation oracles attached. Oracle
/// mismatches are recorded in the report, never silently accepted.
/// Throws InvalidInput when the gate refuses without an override.
BBResult bb_invariants(const SimplicialGraph& g, const BBOptions& options = {});

}  // namespace wlog
