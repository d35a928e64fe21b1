// Command-line front end: ingest graph or Artin-system descriptions, run the
// pipelines and emit deterministic reports.
//
// Exit codes: 0 success, 2 malformed input, 3 flag gate refuted or
// uncertified without override, 4 oracle/claim disagreement (report still
// written).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wlog/artin.hpp"
#include "wlog/bb.hpp"
#include "wlog/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 2;
constexpr int kExitGate = 3;
constexpr int kExitDisagreement = 4;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wlog::InvalidInput("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

long defaultTreeBudget() {
  if (const char* env = std::getenv("WLOGKIT_TREE_BUDGET")) {
    try {
      long value = std::stol(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 1'000'000;
}

struct CommonFlags {
  bool json = false;
  std::string exportPresentation;
};

void maybeExport(const CommonFlags& flags, const wlog::Presentation& p) {
  if (!flags.exportPresentation.empty()) {
    wlog::write_file_atomic(flags.exportPresentation,
                            wlog::export_presentation_text(p));
  }
}

int runBB(const std::string& file, const CommonFlags& flags, const std::string& treeMode,
          long treeBudget, bool emitAll, bool assume) {
  wlog::InputDocument doc = wlog::parse_input(readFile(file));
  if (doc.kind != wlog::InputDocument::Kind::Graph) {
    throw wlog::InvalidInput("bb expects a graph input document");
  }
  wlog::SimplicialGraph g = wlog::to_graph(doc);
  if (!g.connected()) throw wlog::InvalidInput("bb requires a connected graph");

  wlog::GateResult gate = wlog::flag_gate(g, assume);
  if (!gate.passed()) {
    std::cout << wlog::render_bb_gate_report(doc, gate, flags.json);
    return kExitGate;
  }

  wlog::BBOptions options;
  options.assumeSimplyConnected = assume;
  options.treeMode = treeMode == "greedy" ? wlog::TreeSearchMode::Greedy
                                          : wlog::TreeSearchMode::Exact;
  options.treeBudget = treeBudget;
  options.emitAll = emitAll;
  wlog::BBResult result = wlog::bb_invariants(g, options);

  std::string modeNote = treeMode;
  if (result.treeSearchFellBack) modeNote = "greedy (budget fallback)";

  wlog::BBReportContext ctx{doc, g, result, modeNote, emitAll};
  std::cout << wlog::render_bb_report(ctx, flags.json);
  maybeExport(flags, wlog::presentation(result.emission.wlog));
  return result.report.oracle.allAgree() ? kExitOk : kExitDisagreement;
}

int runArtin(const std::string& file, const CommonFlags& flags) {
  wlog::InputDocument doc = wlog::parse_input(readFile(file));
  if (doc.kind != wlog::InputDocument::Kind::Artin) {
    throw wlog::InvalidInput("artin expects an artin input document");
  }
  wlog::ArtinTitsSystem system = wlog::to_artin(doc);
  wlog::ArtinResult result = wlog::artin_invariants(system);

  wlog::ArtinReportContext ctx{doc, system, result};
  std::cout << wlog::render_artin_report(ctx, flags.json);
  maybeExport(flags, wlog::presentation(result.wlog));
  return result.report.oracle.allAgree() ? kExitOk : kExitDisagreement;
}

int runOracle(const std::string& file, const CommonFlags& flags) {
  std::string text = readFile(file);
  std::string kind = wlog::sniff_document_kind(text);
  if (kind == "wlog") {
    wlog::WlogGraph w = wlog::parse_wlog_json(text);
    std::cout << wlog::render_oracle_wlog_report(w, flags.json);
    maybeExport(flags, wlog::presentation(w));
  } else {
    wlog::Presentation p = wlog::parse_presentation_json(text);
    std::cout << wlog::render_oracle_presentation_report(p, flags.json);
    maybeExport(flags, p);
  }
  return kExitOk;
}

int runFlagCheck(const std::string& file, const CommonFlags& flags, bool assume) {
  wlog::InputDocument doc = wlog::parse_input(readFile(file));
  if (doc.kind != wlog::InputDocument::Kind::Graph) {
    throw wlog::InvalidInput("flag-check expects a graph input document");
  }
  wlog::SimplicialGraph g = wlog::to_graph(doc);
  wlog::GateResult gate = wlog::flag_gate(g, assume);
  std::cout << wlog::render_flag_check_report(doc, gate, flags.json);
  return gate.passed() ? kExitOk : kExitGate;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WLOG presentations and multiplier reports for Bestvina-Brady and "
               "Artin groups"};
  app.require_subcommand(1);

  std::string file;
  CommonFlags flags;
  std::string treeMode = "exact";
  long treeBudget = defaultTreeBudget();
  bool emitAll = false;
  bool assume = false;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input document")->required();
    cmd->add_flag("--json", flags.json, "emit the report as JSON");
    cmd->add_option("--export-presentation", flags.exportPresentation,
                    "write the presentation to PATH");
  };

  CLI::App* bb = app.add_subcommand("bb", "Bestvina-Brady pipeline for a graph input");
  addCommon(bb);
  bb->add_option("--tree", treeMode, "spanning tree search mode")
      ->check(CLI::IsMember({"exact", "greedy"}));
  bb->add_option("--tree-budget", treeBudget, "exact enumeration budget");
  bb->add_flag("--emit-all", emitAll, "emit every triangle, skip pruning");
  bb->add_flag("--assume-simply-connected", assume,
               "proceed when the gate cannot certify");

  CLI::App* artin = app.add_subcommand("artin", "Artin pipeline for a labelled input");
  addCommon(artin);

  CLI::App* oracle =
      app.add_subcommand("oracle", "homology oracles for a WLOG or presentation file");
  addCommon(oracle);

  CLI::App* flagCheck =
      app.add_subcommand("flag-check", "simple-connectivity gate for a graph input");
  addCommon(flagCheck);
  flagCheck->add_flag("--assume-simply-connected", assume,
                      "treat an unknown status as passed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bb->parsed()) return runBB(file, flags, treeMode, treeBudget, emitAll, assume);
    if (artin->parsed()) return runArtin(file, flags);
    if (oracle->parsed()) return runOracle(file, flags);
    if (flagCheck->parsed()) return runFlagCheck(file, flags, assume);
  } catch (const wlog::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitMalformed;
}
