#pragma once

// JSON graph documents shared by the crx command-line tool and its tests.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "crx/colouring.hpp"
#include "crx/graph.hpp"
#include "crx/solver.hpp"
#include "crx/rainbow_search.hpp"

namespace crx::cli {

inline constexpr int kFormatVersion = 1;

struct Metadata {
  std::string family;
  nlohmann::json params = nlohmann::json::object();
  std::optional<std::uint64_t> seed;

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

struct GraphDocument {
  int format_version = kFormatVersion;
  Graph graph;
  std::optional<EdgeColouring> colouring;
  std::optional<Metadata> metadata;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// Throws SchemaError. Edges listed out of canonical order are sorted and
/// their colours carried along, so edge ids always follow the canonical order.
GraphDocument parse_document(const nlohmann::json& j);
GraphDocument parse_document(const std::string& text);

nlohmann::json to_json(const GraphDocument& doc);
std::string emit_document(const GraphDocument& doc);

nlohmann::json to_json(const VerificationReport& rep);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const CrxResult& res);

/// DOT text; colour ids map onto a fixed palette cyclically.
std::string to_dot(const GraphDocument& doc);

}  // namespace crx::cli
