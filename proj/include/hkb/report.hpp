#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hkb/certify.hpp"
#include "hkb/surface.hpp"

namespace hkb {

inline constexpr const char* kSchemaVersion = "1.0";

struct NamedValue {
  std::string name;
  Rational value;

  bool operator==(const NamedValue&) const = default;
};

struct ScalarResult {
  std::vector<NamedValue> values;

  bool operator==(const ScalarResult&) const = default;
};

/// Free-form table; cells are already formatted.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const Table&) const = default;
};

using Payload = std::variant<ScalarResult, Table, CoveragePlan, ProofReport, SurfaceGrid>;

/// Top-level JSON document written by the CLI:
///   {schema_version, command, params, payload: {kind, data}, verdict?, generated_at?}
/// Exact values are written as {"exact": "n/d", "float": x}; only "exact" is
/// read back.
struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  Payload payload;
  std::optional<std::string> verdict;
  std::optional<std::string> generated_at;

  bool operator==(const ReportDocument&) const = default;
};

std::string payload_kind(const Payload& payload);

nlohmann::json to_json_document(const ReportDocument& doc);
ReportDocument from_json_document(const nlohmann::json& j);

/// Pretty-printed JSON; byte-identical for equal documents.
std::string serialize(const ReportDocument& doc);
/// Throws nlohmann::json::exception or std::invalid_argument on malformed input.
ReportDocument parse_document(std::string_view text);

// Exposed for tests and for the CLI's recheck command.
void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);
void to_json(nlohmann::json& j, const Objective& o);
void from_json(const nlohmann::json& j, Objective& o);
void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);
void to_json(nlohmann::json& j, const CoveragePlan& p);
void from_json(const nlohmann::json& j, CoveragePlan& p);
void to_json(nlohmann::json& j, const ProofReport& r);
void from_json(const nlohmann::json& j, ProofReport& r);

}  // namespace hkb
