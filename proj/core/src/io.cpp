#include "wlog/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wlog {

using ordered_json = nlohmann::ordered_json;

namespace {

void requireIdent(const std::string& s, const char* what) {
  if (!is_identifier(s)) {
    throw InvalidInput(std::string(what) + " is not a valid identifier: " + s);
  }
}

ordered_json parseJsonText(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InvalidInput("malformed JSON document");
  return doc;
}

}  // namespace

InputDocument parse_input(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_input_json(text) : parse_input_dot(text);
  }
  throw InvalidInput("empty input document");
}

InputDocument parse_input_json(const std::string& text) {
  ordered_json doc = parseJsonText(text);
  if (!doc.is_object()) throw InvalidInput("input document must be a JSON object");
  InputDocument out;
  std::string kind = doc.value("kind", "");
  if (kind == "graph") {
    out.kind = InputDocument::Kind::Graph;
  } else if (kind == "artin") {
    out.kind = InputDocument::Kind::Artin;
  } else {
    throw InvalidInput("input kind must be \"graph\" or \"artin\"");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InvalidInput("input document needs a vertices array");
  }
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw InvalidInput("vertices must be strings");
    std::string name = v.get<std::string>();
    requireIdent(name, "vertex");
    out.vertices.push_back(std::move(name));
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InvalidInput("edges must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("u") || !e.contains("v") ||
          !e["u"].is_string() || !e["v"].is_string()) {
        throw InvalidInput("each edge needs string fields u and v");
      }
      InputDocument::Edge edge{e["u"].get<std::string>(), e["v"].get<std::string>(),
                               std::nullopt};
      if (out.kind == InputDocument::Kind::Artin) {
        if (!e.contains("m") || !e["m"].is_number_integer()) {
          throw InvalidInput("artin edges need an integer label m");
        }
        edge.m = e["m"].get<int>();
      } else if (e.contains("m")) {
        throw InvalidInput("graph edges must not carry a label m");
      }
      out.edges.push_back(std::move(edge));
    }
  }
  return out;
}

namespace {

struct DotLexer {
  std::string text;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '*') {
        pos += 2;
        while (pos + 1 < text.size() && !(text[pos] == '*' && text[pos + 1] == '/')) ++pos;
        pos = std::min(pos + 2, text.size());
      } else {
        break;
      }
    }
  }

  std::string next() {
    skip();
    if (pos >= text.size()) return "";
    char c = text[pos];
    if (c == '{' || c == '}' || c == ';') {
      ++pos;
      return std::string(1, c);
    }
    if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '-') {
      pos += 2;
      return "--";
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_')) {
        ++pos;
      }
      return text.substr(start, pos - start);
    }
    throw InvalidInput(std::string("unexpected character in DOT input: ") + c);
  }
};

}  // namespace

InputDocument parse_input_dot(const std::string& text) {
  DotLexer lex{text};
  if (lex.next() != "graph") {
    throw InvalidInput("DOT subset accepts undirected graphs only (expected \"graph\")");
  }
  std::string tok = lex.next();
  if (tok != "{") {
    requireIdent(tok, "graph name");
    tok = lex.next();
    if (tok != "{") throw InvalidInput("expected '{' after graph name");
  }

  InputDocument out;
  out.kind = InputDocument::Kind::Graph;
  auto declare = [&](const std::string& name) {
    requireIdent(name, "node");
    for (const std::string& v : out.vertices) {
      if (v == name) return;
    }
    out.vertices.push_back(name);
  };

  while (true) {
    tok = lex.next();
    if (tok == "}") break;
    if (tok.empty()) throw InvalidInput("unterminated DOT graph block");
    std::string prev = tok;
    declare(prev);
    while (true) {
      tok = lex.next();
      if (tok == ";") break;
      if (tok != "--") throw InvalidInput("DOT subset allows plain nodes and edges only");
      std::string nextNode = lex.next();
      declare(nextNode);
      out.edges.push_back({prev, nextNode, std::nullopt});
      prev = nextNode;
    }
  }
  if (!lex.next().empty()) throw InvalidInput("unexpected trailing DOT input");
  return out;
}

std::string serialize_input(const InputDocument& doc) {
  ordered_json j;
  j["kind"] = doc.kind == InputDocument::Kind::Graph ? "graph" : "artin";
  j["vertices"] = doc.vertices;
  j["edges"] = ordered_json::array();
  for (const auto& e : doc.edges) {
    ordered_json je;
    je["u"] = e.u;
    je["v"] = e.v;
    if (e.m) je["m"] = *e.m;
    j["edges"].push_back(je);
  }
  return j.dump(2) + "\n";
}

SimplicialGraph to_graph(const InputDocument& doc) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc.edges) edges.emplace_back(e.u, e.v);
  return SimplicialGraph(doc.vertices, edges);
}

ArtinTitsSystem to_artin(const InputDocument& doc) {
  if (doc.kind != InputDocument::Kind::Artin) {
    throw InvalidInput("expected an artin input document");
  }
  SimplicialGraph g = to_graph(doc);
  std::vector<int> labels(g.edgeCount(), 0);
  for (const auto& e : doc.edges) {
    int id = g.edgeIndex(g.vertexIndex(e.u), g.vertexIndex(e.v));
    labels.at(id) = *e.m;
  }
  return ArtinTitsSystem(std::move(g), std::move(labels));
}

WlogGraph parse_wlog_json(const std::string& text) {
  ordered_json doc = parseJsonText(text);
  if (doc.value("kind", "") != "wlog") {
    throw InvalidInput("expected a document with kind \"wlog\"");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InvalidInput("wlog document needs a vertices array");
  }
  std::vector<WlogVertex> vertices;
  std::vector<std::string> pendingWords;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("name") || !v["name"].is_string()) {
      throw InvalidInput("wlog vertices need a name field");
    }
    std::string name = v["name"].get<std::string>();
    requireIdent(name, "wlog vertex");
    vertices.push_back({name, std::nullopt});
    pendingWords.push_back(v.value("word", ""));
  }
  WlogGraph w(std::move(vertices));
  // defining words may only be parsed once the alphabet is complete
  std::vector<WlogVertex> withWords = w.vertices();
  bool anyWord = false;
  for (std::size_t i = 0; i < pendingWords.size(); ++i) {
    if (!pendingWords[i].empty()) {
      withWords[i].definingWord = parse_word(w.alphabet(), pendingWords[i]);
      anyWord = true;
    }
  }
  if (anyWord) w = WlogGraph(std::move(withWords));

  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InvalidInput("wlog edges must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object() || !e.contains("o") || !e.contains("t") || !e.contains("label")) {
        throw InvalidInput("wlog edges need o, t and label fields");
      }
      w.addEdge(e["o"].get<std::string>(), e["t"].get<std::string>(),
                parse_word(w.alphabet(), e["label"].get<std::string>()),
                e.value("source", ""));
    }
  }
  return w;
}

std::string serialize_wlog(const WlogGraph& w) {
  ordered_json j;
  j["kind"] = "wlog";
  j["vertices"] = ordered_json::array();
  for (const WlogVertex& v : w.vertices()) {
    ordered_json jv;
    jv["name"] = v.name;
    if (v.definingWord) jv["word"] = format_word(w.alphabet(), *v.definingWord);
    j["vertices"].push_back(jv);
  }
  j["edges"] = ordered_json::array();
  for (const WlogEdge& e : w.edges()) {
    ordered_json je;
    je["o"] = w.vertices()[e.origin].name;
    je["t"] = w.vertices()[e.terminus].name;
    je["label"] = format_word(w.alphabet(), e.label);
    if (!e.source.empty()) je["source"] = e.source;
    j["edges"].push_back(je);
  }
  return j.dump(2) + "\n";
}

Presentation parse_presentation_json(const std::string& text) {
  ordered_json doc = parseJsonText(text);
  if (doc.value("kind", "") != "presentation") {
    throw InvalidInput("expected a document with kind \"presentation\"");
  }
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw InvalidInput("presentation document needs a generators array");
  }
  std::vector<std::string> names;
  for (const auto& g : doc["generators"]) {
    std::string name = g.get<std::string>();
    requireIdent(name, "generator");
    names.push_back(std::move(name));
  }
  Presentation p;
  p.generators = Alphabet(names);
  if (doc.contains("relators")) {
    for (const auto& r : doc["relators"]) {
      p.relators.push_back(parse_word(p.generators, r.get<std::string>()));
    }
  }
  if (doc.contains("provenance")) {
    for (const auto& s : doc["provenance"]) p.provenance.push_back(s.get<std::string>());
  }
  while (p.provenance.size() < p.relators.size()) p.provenance.emplace_back();
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  ordered_json j;
  j["kind"] = "presentation";
  j["generators"] = p.generators.names();
  j["relators"] = ordered_json::array();
  for (const Word& r : p.relators) j["relators"].push_back(format_word(p.generators, r));
  j["provenance"] = p.provenance;
  return j.dump(2) + "\n";
}

std::string sniff_document_kind(const std::string& text) {
  ordered_json doc = parseJsonText(text);
  std::string kind = doc.value("kind", "");
  if (kind != "wlog" && kind != "presentation") {
    throw InvalidInput("oracle input must have kind \"wlog\" or \"presentation\"");
  }
  return kind;
}

std::string export_presentation_text(const Presentation& p) {
  std::ostringstream out;
  bool first = true;
  for (const std::string& name : p.generators.names()) {
    if (!first) out << ' ';
    out << name;
    first = false;
  }
  out << '\n';
  for (const Word& r : p.relators) out << format_word(p.generators, r) << '\n';
  return out.str();
}

// ---- report documents ------------------------------------------------------

namespace {

ordered_json inputJson(const InputDocument& doc) {
  ordered_json j;
  j["kind"] = doc.kind == InputDocument::Kind::Graph ? "graph" : "artin";
  j["vertices"] = doc.vertices;
  j["edges"] = ordered_json::array();
  for (const auto& e : doc.edges) {
    ordered_json je;
    je["u"] = e.u;
    je["v"] = e.v;
    if (e.m) je["m"] = *e.m;
    j["edges"].push_back(je);
  }
  return j;
}

ordered_json gateJson(const GateResult& gate) {
  ordered_json j;
  j["status"] = to_string(gate.status);
  j["flagH1"] = gate.flagH1.str();
  j["pi1Certificate"] =
      gate.certificate == CertificateStatus::Certified ? "certified" : "unknown";
  return j;
}

ordered_json wlogJson(const WlogGraph& w) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const WlogVertex& v : w.vertices()) {
    ordered_json jv;
    jv["name"] = v.name;
    if (v.definingWord) jv["word"] = format_word(w.alphabet(), *v.definingWord);
    j["vertices"].push_back(jv);
  }
  j["edges"] = ordered_json::array();
  long loops = 0;
  for (const WlogEdge& e : w.edges()) {
    ordered_json je;
    je["o"] = w.vertices()[e.origin].name;
    je["t"] = w.vertices()[e.terminus].name;
    je["label"] = format_word(w.alphabet(), e.label);
    if (!e.source.empty()) je["source"] = e.source;
    if (e.origin == e.terminus) ++loops;
    j["edges"].push_back(je);
  }
  j["loopCount"] = loops;
  return j;
}

ordered_json presentationJson(const Presentation& p) {
  ordered_json j;
  j["generators"] = p.generators.names();
  j["relators"] = ordered_json::array();
  for (const Word& r : p.relators) j["relators"].push_back(format_word(p.generators, r));
  j["provenance"] = p.provenance;
  return j;
}

ordered_json generatorJson(const MultiplierGenerator& g, const Alphabet& a) {
  ordered_json j;
  j["base"] = g.baseVertex;
  j["loopWord"] = format_word(a, g.loopWord);
  j["commutator"] = format_word(a, g.commutatorWord);
  j["sourceEdge"] = g.sourceEdge;
  return j;
}

ordered_json multipliersJson(const MultiplierReport& r, const Alphabet& a) {
  ordered_json j;
  j["h2RankClaim"] = r.h2RankClaim;
  j["b0RankClaim"] = r.b0RankClaim;
  j["h2Generators"] = ordered_json::array();
  for (const auto& g : r.h2Generators) j["h2Generators"].push_back(generatorJson(g, a));
  j["b0Generators"] = ordered_json::array();
  for (const auto& g : r.b0Generators) j["b0Generators"].push_back(generatorJson(g, a));
  return j;
}

ordered_json suspensionJson(const SuspensionReport& s) {
  ordered_json j;
  j["expectedH1"] = s.expectedH1.str();
  j["actualH1"] = s.actualH1.str();
  j["expectedH2FreeRank"] = s.expectedH2FreeRank;
  j["actualH2FreeRank"] = s.actualH2FreeRank;
  j["pass"] = s.pass;
  return j;
}

ordered_json oracleJson(const OracleRecord& o) {
  ordered_json j;
  j["suspension"] = suspensionJson(o.suspension);
  ordered_json ext;
  ext["applicable"] = o.exteriorApplicable;
  if (o.exteriorApplicable) {
    ext["rank"] = o.exteriorRank;
    ext["target"] = o.exteriorTarget;
    ext["agrees"] = o.exteriorAgrees;
    ext["substituted"] = o.exteriorSubstituted;
  }
  if (o.exteriorFilteredRank >= 0) ext["filteredRank"] = o.exteriorFilteredRank;
  if (!o.exteriorNote.empty()) ext["note"] = o.exteriorNote;
  j["exterior"] = ext;
  if (o.substitutedAbelianization) {
    ordered_json ab;
    ab["computed"] = o.substitutedAbelianization->str();
    ab["expected"] = o.expectedAbelianization->str();
    ab["agrees"] = o.abelianizationAgrees;
    j["abelianization"] = ab;
  }
  j["skippedSpanVerified"] = o.skippedSpanVerified;
  if (o.componentCheck) {
    ordered_json cc;
    cc["computed"] = o.componentCheck->computed;
    cc["paperFormula"] = o.componentCheck->paperFormula;
    cc["agree"] = o.componentCheck->agree;
    j["componentCount"] = cc;
  }
  j["allAgree"] = o.allAgree();
  return j;
}

ordered_json emissionJson(const SimplicialGraph& g, const std::vector<EmissionRecord>& recs,
                          const Alphabet& wlogAlphabet) {
  ordered_json arr = ordered_json::array();
  for (const EmissionRecord& rec : recs) {
    ordered_json j;
    j["triangle"] = triangle_name(g, rec.triangle);
    switch (rec.action) {
      case EmissionAction::EmittedLoop: j["action"] = "loop"; break;
      case EmissionAction::EmittedVertexAndLoop: j["action"] = "vertex+loop"; break;
      case EmissionAction::Skipped: j["action"] = "skipped"; break;
    }
    if (rec.action == EmissionAction::Skipped) {
      j["apex"] = g.vertexName(rec.certificate->apex);
      ordered_json flanking = ordered_json::array();
      for (const Triangle& t : rec.certificate->flanking) {
        flanking.push_back(triangle_name(g, t));
      }
      j["flanking"] = flanking;
    } else {
      j["placedAt"] = rec.placedAt;
      j["label"] = format_word(wlogAlphabet, rec.label);
    }
    arr.push_back(j);
  }
  return arr;
}

// Text rendering walks the JSON document so both outputs carry identical
// values by construction.

void textKeyValues(std::ostream& out, const ordered_json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    out << indent << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << '\n';
  }
}

void textSection(std::ostream& out, const std::string& title) {
  out << title << '\n';
}

void textInput(std::ostream& out, const ordered_json& input) {
  textSection(out, "input");
  out << "  kind: " << input["kind"].get<std::string>() << '\n';
  out << "  vertices:";
  for (const auto& v : input["vertices"]) out << ' ' << v.get<std::string>();
  out << '\n';
  out << "  edges:";
  for (const auto& e : input["edges"]) {
    out << " {" << e["u"].get<std::string>() << "," << e["v"].get<std::string>();
    if (e.contains("m")) out << ";m=" << e["m"].dump();
    out << "}";
  }
  out << '\n';
}

void textWlog(std::ostream& out, const ordered_json& w) {
  textSection(out, "wlog");
  out << "  vertices:";
  for (const auto& v : w["vertices"]) {
    out << ' ' << v["name"].get<std::string>();
    if (v.contains("word")) out << "[=" << v["word"].get<std::string>() << "]";
  }
  out << '\n';
  for (const auto& e : w["edges"]) {
    out << "  edge " << e["o"].get<std::string>() << " -> " << e["t"].get<std::string>()
        << " label " << e["label"].get<std::string>();
    if (e.contains("source")) out << "  (" << e["source"].get<std::string>() << ")";
    out << '\n';
  }
  out << "  loopCount: " << w["loopCount"].dump() << '\n';
}

void textPresentation(std::ostream& out, const ordered_json& p) {
  textSection(out, "presentation");
  out << "  generators:";
  for (const auto& g : p["generators"]) out << ' ' << g.get<std::string>();
  out << '\n';
  const auto& prov = p["provenance"];
  std::size_t i = 0;
  for (const auto& r : p["relators"]) {
    out << "  relator " << r.get<std::string>();
    if (i < prov.size() && !prov[i].get<std::string>().empty()) {
      out << "  (" << prov[i].get<std::string>() << ")";
    }
    out << '\n';
    ++i;
  }
}

void textMultipliers(std::ostream& out, const ordered_json& m) {
  textSection(out, "multipliers");
  out << "  H2 rank claim: " << m["h2RankClaim"].dump() << '\n';
  out << "  B0 rank claim: " << m["b0RankClaim"].dump() << '\n';
  for (const char* key : {"h2Generators", "b0Generators"}) {
    out << "  " << key << ":\n";
    for (const auto& g : m[key]) {
      out << "    base " << g["base"].get<std::string>() << "  loop word "
          << g["loopWord"].get<std::string>() << "  commutator "
          << g["commutator"].get<std::string>() << "  edge " << g["sourceEdge"].dump()
          << '\n';
    }
  }
}

void textOracles(std::ostream& out, const ordered_json& o) {
  textSection(out, "oracles");
  out << "  suspension: expected H1=" << o["suspension"]["expectedH1"].get<std::string>()
      << " H2free=" << o["suspension"]["expectedH2FreeRank"].dump()
      << "; actual H1=" << o["suspension"]["actualH1"].get<std::string>()
      << " H2free=" << o["suspension"]["actualH2FreeRank"].dump() << "; pass="
      << o["suspension"]["pass"].dump() << '\n';
  const auto& ext = o["exterior"];
  out << "  exterior: applicable=" << ext["applicable"].dump();
  if (ext["applicable"].get<bool>()) {
    out << " rank=" << ext["rank"].dump() << " target=" << ext["target"].dump()
        << " agrees=" << ext["agrees"].dump() << " substituted="
        << ext["substituted"].dump();
  }
  if (ext.contains("filteredRank")) out << " filteredRank=" << ext["filteredRank"].dump();
  if (ext.contains("note")) out << " note=\"" << ext["note"].get<std::string>() << "\"";
  out << '\n';
  if (o.contains("abelianization")) {
    out << "  abelianization: computed=" << o["abelianization"]["computed"].get<std::string>()
        << " expected=" << o["abelianization"]["expected"].get<std::string>()
        << " agrees=" << o["abelianization"]["agrees"].dump() << '\n';
  }
  out << "  skippedSpanVerified: " << o["skippedSpanVerified"].dump() << '\n';
  if (o.contains("componentCount")) {
    out << "  componentCount: computed=" << o["componentCount"]["computed"].dump()
        << " paperFormula=" << o["componentCount"]["paperFormula"].dump()
        << " agree=" << o["componentCount"]["agree"].dump() << '\n';
  }
  out << "  allAgree: " << o["allAgree"].dump() << '\n';
}

void textWarnings(std::ostream& out, const ordered_json& warnings) {
  if (warnings.empty()) return;
  textSection(out, "warnings");
  for (const auto& w : warnings) out << "  " << w.get<std::string>() << '\n';
}

std::string renderDocument(const ordered_json& doc, bool asJson) {
  if (asJson) return doc.dump(2) + "\n";
  std::ostringstream out;
  out << "wlogkit " << doc["tool"].get<std::string>() << " report\n";
  if (doc.contains("input")) textInput(out, doc["input"]);
  if (doc.contains("gate")) {
    textSection(out, "gate");
    textKeyValues(out, doc["gate"], "  ");
  }
  if (doc.contains("tree")) {
    textSection(out, "tree");
    const auto& t = doc["tree"];
    out << "  mode: " << t["mode"].get<std::string>() << '\n';
    out << "  edges:";
    for (const auto& e : t["edges"]) out << ' ' << e.get<std::string>();
    out << '\n';
    out << "  generators:";
    for (const auto& [k, v] : t["generators"].items()) {
      out << ' ' << k << '=' << v.get<std::string>();
    }
    out << '\n';
    out << "  unfavourableTriangles: " << t["unfavourableTriangles"].dump() << '\n';
  }
  if (doc.contains("emission")) {
    textSection(out, "emission");
    for (const auto& e : doc["emission"]) {
      out << "  triangle " << e["triangle"].get<std::string>() << ": "
          << e["action"].get<std::string>();
      if (e.contains("placedAt")) {
        out << " at " << e["placedAt"].get<std::string>() << " label "
            << e["label"].get<std::string>();
      }
      if (e.contains("apex")) {
        out << " apex " << e["apex"].get<std::string>() << " flanking";
        for (const auto& f : e["flanking"]) out << ' ' << f.get<std::string>();
      }
      out << '\n';
    }
  }
  if (doc.contains("wlog")) textWlog(out, doc["wlog"]);
  if (doc.contains("presentation")) textPresentation(out, doc["presentation"]);
  if (doc.contains("homology")) {
    textSection(out, "homology");
    textKeyValues(out, doc["homology"], "  ");
  }
  if (doc.contains("multipliers")) textMultipliers(out, doc["multipliers"]);
  if (doc.contains("oracles")) textOracles(out, doc["oracles"]);
  if (doc.contains("suspension")) {
    textSection(out, "suspension");
    textKeyValues(out, doc["suspension"], "  ");
  }
  if (doc.contains("exterior")) {
    textSection(out, "exterior");
    textKeyValues(out, doc["exterior"], "  ");
  }
  if (doc.contains("notes")) {
    textSection(out, "notes");
    for (const auto& n : doc["notes"]) out << "  " << n.get<std::string>() << '\n';
  }
  if (doc.contains("warnings")) textWarnings(out, doc["warnings"]);
  return out.str();
}

}  // namespace

std::string render_bb_report(const BBReportContext& ctx, bool asJson) {
  const BBResult& r = ctx.result;
  const WlogGraph& wlog = r.emission.wlog;
  Presentation p = presentation(wlog);

  ordered_json doc;
  doc["tool"] = "bb";
  doc["input"] = inputJson(ctx.input);
  doc["gate"] = gateJson(r.gate);

  ordered_json tree;
  tree["mode"] = ctx.treeMode;
  tree["edges"] = ordered_json::array();
  for (int e : r.tree.edgeIds()) tree["edges"].push_back(ctx.graph.edgeName(e));
  tree["generators"] = ordered_json::object();
  Alphabet treeAlpha = tree_alphabet(r.tree);
  for (std::size_t i = 0; i < r.tree.edgeIds().size(); ++i) {
    tree["generators"][treeAlpha.name(static_cast<int>(i))] =
        ctx.graph.edgeName(r.tree.edgeIds()[i]);
  }
  tree["unfavourableTriangles"] = r.unfavourableCount;
  tree["emitAll"] = ctx.emitAll;
  doc["tree"] = tree;

  doc["emission"] = emissionJson(ctx.graph, r.emission.records, wlog.alphabet());
  doc["wlog"] = wlogJson(wlog);
  doc["presentation"] = presentationJson(p);
  doc["multipliers"] = multipliersJson(r.report, wlog.alphabet());
  doc["oracles"] = oracleJson(r.report.oracle);
  doc["warnings"] = p.warnings;
  return renderDocument(doc, asJson);
}

std::string render_bb_gate_report(const InputDocument& input, const GateResult& gate,
                                  bool asJson) {
  ordered_json doc;
  doc["tool"] = "bb";
  doc["input"] = inputJson(input);
  doc["gate"] = gateJson(gate);
  doc["warnings"] = ordered_json::array();
  doc["warnings"].push_back("pipeline stopped at the flag gate (status " +
                            to_string(gate.status) + ")");
  return renderDocument(doc, asJson);
}

std::string render_artin_report(const ArtinReportContext& ctx, bool asJson) {
  const ArtinResult& r = ctx.result;
  Presentation p = presentation(r.wlog);

  ordered_json doc;
  doc["tool"] = "artin";
  doc["input"] = inputJson(ctx.input);
  doc["wlog"] = wlogJson(r.wlog);
  doc["presentation"] = presentationJson(p);
  doc["multipliers"] = multipliersJson(r.report, r.wlog.alphabet());
  doc["oracles"] = oracleJson(r.report.oracle);
  doc["notes"] = r.notes;
  doc["warnings"] = p.warnings;
  return renderDocument(doc, asJson);
}

std::string render_oracle_wlog_report(const WlogGraph& w, bool asJson) {
  Presentation p = presentation(w);
  ComplexHomology h = presentation_complex_homology(p);
  MultiplierReport report = multiplier_report(w);

  ordered_json doc;
  doc["tool"] = "oracle";
  doc["wlog"] = wlogJson(w);
  doc["presentation"] = presentationJson(p);
  ordered_json hom;
  hom["h1"] = h.h1.str();
  hom["h2FreeRank"] = h.h2FreeRank;
  doc["homology"] = hom;
  doc["multipliers"] = multipliersJson(report, w.alphabet());
  doc["oracles"] = oracleJson(report.oracle);
  doc["warnings"] = p.warnings;
  return renderDocument(doc, asJson);
}

std::string render_oracle_presentation_report(const Presentation& p, bool asJson) {
  ComplexHomology h = presentation_complex_homology(p);

  ordered_json doc;
  doc["tool"] = "oracle";
  doc["presentation"] = presentationJson(p);
  ordered_json hom;
  hom["h1"] = h.h1.str();
  hom["h2FreeRank"] = h.h2FreeRank;
  doc["homology"] = hom;

  ordered_json ext;
  bool allZeroSum = true;
  for (const Word& r : p.relators) {
    auto vec = abelianize(r, p.generators.size());
    for (auto c : vec) {
      if (c != 0) allZeroSum = false;
    }
  }
  if (allZeroSum) {
    ext["applicable"] = true;
    ext["rank"] = exterior_rank(p.relators, p.generators.size());
  } else {
    ext["applicable"] = false;
    ext["note"] = "not-applicable: some relator has non-zero exponent sum";
  }
  doc["exterior"] = ext;
  doc["warnings"] = p.warnings;
  return renderDocument(doc, asJson);
}

std::string render_flag_check_report(const InputDocument& input, const GateResult& gate,
                                     bool asJson) {
  ordered_json doc;
  doc["tool"] = "flag-check";
  doc["input"] = inputJson(input);
  doc["gate"] = gateJson(gate);
  return renderDocument(doc, asJson);
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InvalidInput("cannot write file: " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw InvalidInput("cannot move report into place: " + path);
  }
}

}  // namespace wlog
