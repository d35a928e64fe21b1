#pragma once

// Batch-front-end plumbing: input documents (JSON schema plus a DOT subset
// for plain graphs), WLOG and presentation serialization, and the report
// renderers. Reports are deterministic; the text renderer reads the same
// document the JSON mode emits.

#include <optional>
#include <string>
#include <vector>

#include "wlog/artin.hpp"
#include "wlog/bb.hpp"
#include "wlog/graph.hpp"
#include "wlog/wlog_graph.hpp"

namespace wlog {

struct InputDocument {
  enum class Kind { Graph, Artin };
  Kind kind = Kind::Graph;
  std::vector<std::string> vertices;
  struct Edge {
    std::string u, v;
    std::optional<int> m;  // required for Artin input, forbidden for graphs
    bool operator==(const Edge&) const = default;
  };
  std::vector<Edge> edges;
  bool operator==(const InputDocument&) const = default;
};

/// Sniffs the format: a leading '{' means the JSON schema, otherwise the
/// DOT subset (undirected simple graphs, plain nodes and edges only).
InputDocument parse_input(const std::string& text);
InputDocument parse_input_json(const std::string& text);
InputDocument parse_input_dot(const std::string& text);
std::string serialize_input(const InputDocument& doc);

SimplicialGraph to_graph(const InputDocument& doc);
ArtinTitsSystem to_artin(const InputDocument& doc);

WlogGraph parse_wlog_json(const std::string& text);
std::string serialize_wlog(const WlogGraph& w);

Presentation parse_presentation_json(const std::string& text);
std::string serialize_presentation(const Presentation& p);

/// "wlog" or "presentation", from the document's kind field.
std::string sniff_document_kind(const std::string& text);

/// Generator list line followed by one relator per line in the word grammar.
std::string export_presentation_text(const Presentation& p);

// ---- report rendering ----------------------------------------------------

struct BBReportContext {
  const InputDocument& input;
  const SimplicialGraph& graph;
  const BBResult& result;
  std::string treeMode;  // "exact", "greedy", "greedy (budget fallback)", "given"
  bool emitAll = false;
};

std::string render_bb_report(const BBReportContext& ctx, bool asJson);

/// Gate-only report for runs stopped at the gate.
std::string render_bb_gate_report(const InputDocument& input, const GateResult& gate,
                                  bool asJson);

struct ArtinReportContext {
  const InputDocument& input;
  const ArtinTitsSystem& system;
  const ArtinResult& result;
};

std::string render_artin_report(const ArtinReportContext& ctx, bool asJson);

std::string render_oracle_wlog_report(const WlogGraph& w, bool asJson);
std::string render_oracle_presentation_report(const Presentation& p, bool asJson);

std::string render_flag_check_report(const InputDocument& input, const GateResult& gate,
                                     bool asJson);

/// Atomic file write (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace wlog
