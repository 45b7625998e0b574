#include "document.hpp"

#include <array>
#include <numeric>
#include <sstream>

#include "crx/errors.hpp"

namespace crx::cli {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) {
    throw SchemaError(std::string("field '") + field + "' must be an integer");
  }
  return j.at(field).get<int>();
}

const char* kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::DistanceBound: return "distance_bound";
    case CertificateKind::ColourCollision: return "colour_collision";
    case CertificateKind::ObstructionPair: return "obstruction_pair";
    case CertificateKind::Exhaustion: return "exhaustion";
  }
  return "unknown";
}

const char* kind_name(ResultKind k) {
  switch (k) {
    case ResultKind::Exact: return "exact";
    case ResultKind::Interval: return "interval";
    case ResultKind::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

GraphDocument parse_document(const json& j) {
  if (!j.is_object()) throw SchemaError("document must be a JSON object");
  GraphDocument doc;
  doc.format_version = require_int(j, "format_version");
  if (doc.format_version != kFormatVersion) {
    throw SchemaError("unsupported format_version " + std::to_string(doc.format_version));
  }
  const int n = require_int(j, "n");
  if (!j.contains("edges") || !j.at("edges").is_array()) throw SchemaError("field 'edges' must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw SchemaError("each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    doc.graph = Graph(n, edges);
  } catch (const InvalidParameter& ex) {
    throw SchemaError(std::string("invalid graph: ") + ex.what());
  }

  if (j.contains("colouring") && !j.at("colouring").is_null()) {
    const json& c = j.at("colouring");
    if (!c.is_object()) throw SchemaError("field 'colouring' must be an object");
    const int r = require_int(c, "r");
    if (!c.contains("colours") || !c.at("colours").is_array() || c.at("colours").size() != edges.size()) {
      throw SchemaError("colouring needs one colour per edge");
    }
    std::vector<Colour> colours(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const json& x = c.at("colours")[i];
      if (!x.is_number_integer()) throw SchemaError("colours must be integers");
      colours[static_cast<std::size_t>(*doc.graph.edge_between(edges[i].first, edges[i].second))] = x.get<int>();
    }
    try {
      doc.colouring = EdgeColouring(doc.graph, std::move(colours), r);
    } catch (const InvalidParameter& ex) {
      throw SchemaError(std::string("invalid colouring: ") + ex.what());
    }
  }

  if (j.contains("metadata") && !j.at("metadata").is_null()) {
    const json& m = j.at("metadata");
    if (!m.is_object()) throw SchemaError("field 'metadata' must be an object");
    Metadata meta;
    if (m.contains("family")) {
      if (!m.at("family").is_string()) throw SchemaError("metadata.family must be a string");
      meta.family = m.at("family").get<std::string>();
    }
    if (m.contains("params")) {
      if (!m.at("params").is_object()) throw SchemaError("metadata.params must be an object");
      meta.params = m.at("params");
    }
    if (m.contains("seed") && !m.at("seed").is_null()) {
      if (!m.at("seed").is_number_unsigned()) throw SchemaError("metadata.seed must be a nonnegative integer");
      meta.seed = m.at("seed").get<std::uint64_t>();
    }
    doc.metadata = std::move(meta);
  }
  return doc;
}

GraphDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw SchemaError(std::string("malformed JSON: ") + ex.what());
  }
  return parse_document(j);
}

json to_json(const GraphDocument& doc) {
  json j;
  j["format_version"] = doc.format_version;
  j["n"] = doc.graph.order();
  json edges = json::array();
  for (const Edge& e : doc.graph.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (doc.colouring) {
    j["colouring"] = {{"r", doc.colouring->colour_count()},
                      {"colours", std::vector<Colour>(doc.colouring->colours().begin(), doc.colouring->colours().end())}};
  }
  if (doc.metadata) {
    json m;
    m["family"] = doc.metadata->family;
    m["params"] = doc.metadata->params;
    if (doc.metadata->seed) m["seed"] = *doc.metadata->seed;
    j["metadata"] = std::move(m);
  }
  return j;
}

std::string emit_document(const GraphDocument& doc) { return to_json(doc).dump(2) + "\n"; }

json to_json(const VerificationReport& rep) {
  json j;
  j["status"] = rep.certified() ? "certified" : "counterexample";
  if (rep.bad_set) j["bad_set"] = *rep.bad_set;
  j["subsets_checked"] = rep.subsets_checked;
  j["nodes"] = rep.nodes;
  return j;
}

json to_json(const Certificate& cert) {
  json j;
  j["kind"] = kind_name(cert.kind);
  j["bound"] = cert.bound;
  switch (cert.kind) {
    case CertificateKind::DistanceBound:
      j["set"] = cert.set;
      break;
    case CertificateKind::Exhaustion:
      j["colours"] = cert.colours;
      j["count"] = cert.count;
      break;
    case CertificateKind::ObstructionPair: {
      json obs = json::array();
      for (const Obstruction& o : cert.obstructions) obs.push_back({{"e", o.e}, {"e2", o.e2}, {"set", o.set}});
      j["obstructions"] = std::move(obs);
      break;
    }
    case CertificateKind::ColourCollision:
      j["set"] = cert.set;
      if (cert.colouring) {
        j["colouring"] = std::vector<Colour>(cert.colouring->colours().begin(), cert.colouring->colours().end());
      }
      break;
  }
  return j;
}

json to_json(const CrxResult& res) {
  json j;
  j["kind"] = kind_name(res.kind);
  if (res.exact()) {
    j["value"] = res.value();
  } else {
    j["lower"] = res.lower;
    j["upper"] = res.upper;
  }
  if (res.witness) {
    j["witness"] = {{"r", res.witness->colour_count()},
                    {"colours", std::vector<Colour>(res.witness->colours().begin(), res.witness->colours().end())}};
  }
  json ev = json::array();
  for (const auto& e : res.evidence) ev.push_back({{"colours", e.colours}, {"certificate", to_json(e.certificate)}});
  j["evidence"] = std::move(ev);
  j["nodes"] = res.nodes;
  return j;
}

std::string to_dot(const GraphDocument& doc) {
  static constexpr std::array<const char*, 12> kPalette = {
      "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
      "#f032e6", "#bfef45", "#469990", "#9a6324", "#800000", "#000075"};
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < doc.graph.order(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < doc.graph.size(); ++e) {
    const Edge& ed = doc.graph.edge(e);
    out << "  " << ed.u << " -- " << ed.v;
    if (doc.colouring) {
      Colour c = doc.colouring->colour(e);
      out << " [color=\"" << kPalette[static_cast<std::size_t>(c) % kPalette.size()] << "\", label=\"" << c << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace crx::cli
