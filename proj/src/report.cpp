#include "hkb/report.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hkb {

using nlohmann::json;

namespace {

template <class T>
json opt_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from_json(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json doubles_to_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(std::isfinite(x) ? json(x) : json(nullptr));
  return a;
}

std::vector<double> doubles_from_json(const json& a) {
  std::vector<double> v;
  v.reserve(a.size());
  for (const auto& x : a) v.push_back(x.is_null() ? std::numeric_limits<double>::quiet_NaN() : x.get<double>());
  return v;
}

}  // namespace

void to_json(json& j, const Rational& r) { j = json{{"exact", r.str()}, {"float", r.to_double()}}; }

void from_json(const json& j, Rational& r) {
  if (j.is_object()) {
    r = Rational::parse(j.at("exact").get<std::string>());
  } else if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<long long>());
  } else {
    throw std::invalid_argument("expected an exact rational");
  }
}

void to_json(json& j, const OrderValue& v) { j = json{{"multiplicity", v.multiplicity}, {"offset", v.offset}}; }

void from_json(const json& j, OrderValue& v) {
  v.multiplicity = j.at("multiplicity").get<unsigned>();
  v.offset = j.at("offset").get<Rational>();
}

void to_json(json& j, const BoundSpec& s) {
  j = json{{"dimension", s.dimension}, {"e", s.e}, {"mu", s.mu}, {"k", s.k}, {"extra", s.extra}};
}

void from_json(const json& j, BoundSpec& s) {
  s.dimension = j.at("dimension").get<unsigned>();
  s.e = j.at("e").get<Rational>();
  s.mu = j.at("mu").get<unsigned>();
  s.k = j.at("k").get<unsigned>();
  s.extra = j.value("extra", json::array()).get<std::vector<OrderValue>>();
}

void to_json(json& j, const Objective& o) {
  j = std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HBoundObjective>) {
          return {{"e", v.e}, {"d", v.d}, {"k", v.k}};
        } else if constexpr (std::is_same_v<T, GeneralBoundObjective>) {
          return {{"spec", v.spec}};
        } else if constexpr (std::is_same_v<T, RangeMinObjective>) {
          return {{"e1", v.e1}, {"e2", v.e2}, {"d", v.d}, {"k", v.k}};
        } else if constexpr (std::is_same_v<T, MuSmallObjective>) {
          return {{"e", v.e}, {"mu", v.mu}, {"d", v.d}};
        } else if constexpr (std::is_same_v<T, NotNormalObjective>) {
          return {{"k", v.k}};
        } else {
          return {{"e", v.e}, {"d", v.d}};
        }
      },
      o);
  j["kind"] = objective_kind(o);
}

void from_json(const json& j, Objective& o) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == objective_kind(HBoundObjective{})) {
    o = HBoundObjective{j.at("e").get<Rational>(), j.at("d").get<unsigned>(), j.at("k").get<unsigned>()};
  } else if (kind == objective_kind(GeneralBoundObjective{})) {
    o = GeneralBoundObjective{j.at("spec").get<BoundSpec>()};
  } else if (kind == objective_kind(RangeMinObjective{})) {
    o = RangeMinObjective{j.at("e1").get<Rational>(), j.at("e2").get<Rational>(), j.at("d").get<unsigned>(),
                          j.at("k").get<unsigned>()};
  } else if (kind == objective_kind(MuSmallObjective{})) {
    o = MuSmallObjective{j.at("e").get<Rational>(), j.at("mu").get<unsigned>(), j.at("d").get<unsigned>()};
  } else if (kind == objective_kind(NotNormalObjective{})) {
    o = NotNormalObjective{j.at("k").get<unsigned>()};
  } else if (kind == objective_kind(MultiplicityRatioObjective{})) {
    o = MultiplicityRatioObjective{j.at("e").get<Rational>(), j.at("d").get<unsigned>()};
  } else {
    throw std::invalid_argument("unknown objective kind: " + kind);
  }
}

void to_json(json& j, const Certificate& c) {
  j = json{{"objective", c.objective}, {"s", c.s},           {"t", c.t},
           {"value", c.value},         {"target", c.target}, {"verdict", c.verdict}};
}

void from_json(const json& j, Certificate& c) {
  c.objective = j.at("objective").get<Objective>();
  c.s = j.at("s").get<Rational>();
  c.t = j.at("t").get<Rational>();
  c.value = j.at("value").get<Rational>();
  c.target = j.at("target").get<Rational>();
  c.verdict = j.at("verdict").get<bool>();
}

void to_json(json& j, const CoverageInterval& c) {
  j = json{{"e1", c.e1},
           {"e2", c.e2},
           {"s0", c.s0},
           {"t0", c.t0},
           {"certified_min", c.certified_min},
           {"e_max", opt_to_json(c.e_max)},
           {"certificate", c.certificate}};
}

void from_json(const json& j, CoverageInterval& c) {
  c.e1 = j.at("e1").get<std::int64_t>();
  c.e2 = j.at("e2").get<std::int64_t>();
  c.s0 = j.at("s0").get<Rational>();
  c.t0 = j.at("t0").get<Rational>();
  c.certified_min = j.at("certified_min").get<Rational>();
  c.e_max = opt_from_json<Rational>(j, "e_max");
  c.certificate = j.at("certificate").get<Certificate>();
}

void to_json(json& j, const CoverageGap& g) { j = json{{"e1", g.e1}, {"e2", g.e2}, {"reason", g.reason}}; }

void from_json(const json& j, CoverageGap& g) {
  g.e1 = j.at("e1").get<std::int64_t>();
  g.e2 = j.at("e2").get<std::int64_t>();
  g.reason = j.at("reason").get<std::string>();
}

void to_json(json& j, const CoveragePlan& p) {
  j = json{{"dimension", p.dimension}, {"k", p.k},
           {"target", p.target},       {"e_lo", p.e_lo},
           {"e_hi", p.e_hi},           {"complete", p.complete()},
           {"intervals", p.intervals}, {"gaps", p.gaps}};
}

void from_json(const json& j, CoveragePlan& p) {
  p.dimension = j.at("dimension").get<unsigned>();
  p.k = j.at("k").get<unsigned>();
  p.target = j.at("target").get<Rational>();
  p.e_lo = j.at("e_lo").get<std::int64_t>();
  p.e_hi = j.at("e_hi").get<std::int64_t>();
  p.intervals = j.at("intervals").get<std::vector<CoverageInterval>>();
  p.gaps = j.at("gaps").get<std::vector<CoverageGap>>();
}

void to_json(json& j, const TargetValue& t) {
  j = json{{"dimension", t.dimension},
           {"characteristic", opt_to_json(t.characteristic)},
           {"value", t.value},
           {"provenance", to_string(t.provenance)}};
}

void from_json(const json& j, TargetValue& t) {
  t.dimension = j.at("dimension").get<unsigned>();
  t.characteristic = opt_from_json<Rational>(j, "characteristic");
  t.value = j.at("value").get<Rational>();
  const auto prov = j.at("provenance").get<std::string>();
  if (prov == to_string(TargetProvenance::series)) {
    t.provenance = TargetProvenance::series;
  } else if (prov == to_string(TargetProvenance::closed_form_d7)) {
    t.provenance = TargetProvenance::closed_form_d7;
  } else if (prov == to_string(TargetProvenance::user_supplied)) {
    t.provenance = TargetProvenance::user_supplied;
  } else {
    throw std::invalid_argument("unknown target provenance: " + prov);
  }
}

void to_json(json& j, const CaseEntry& c) {
  j = json{{"kind", to_string(c.kind)},
           {"label", c.label},
           {"parameters", c.parameters},
           {"certificate", opt_to_json(c.certificate)},
           {"citation", c.citation}};
}

void from_json(const json& j, CaseEntry& c) {
  c.kind = case_kind_from_string(j.at("kind").get<std::string>());
  c.label = j.at("label").get<std::string>();
  c.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  c.certificate = opt_from_json<Certificate>(j, "certificate");
  c.citation = j.value("citation", std::string());
}

void to_json(json& j, const ProofReport& r) {
  j = json{{"dimension", r.dimension},   {"k", r.k},
           {"target", r.target},         {"target_note", r.target_note},
           {"threshold", r.threshold},   {"hypotheses", r.hypotheses},
           {"cases", r.cases},           {"coverage", opt_to_json(r.coverage)},
           {"verdict", r.verdict()}};
}

void from_json(const json& j, ProofReport& r) {
  r.dimension = j.at("dimension").get<unsigned>();
  r.k = j.at("k").get<unsigned>();
  r.target = j.at("target").get<TargetValue>();
  r.target_note = j.value("target_note", std::string());
  r.threshold = j.at("threshold").get<std::int64_t>();
  r.hypotheses = j.at("hypotheses").get<std::vector<std::string>>();
  r.cases = j.at("cases").get<std::vector<CaseEntry>>();
  r.coverage = opt_from_json<CoveragePlan>(j, "coverage");
}

void to_json(json& j, const NamedValue& v) { j = json{{"name", v.name}, {"value", v.value}}; }

void from_json(const json& j, NamedValue& v) {
  v.name = j.at("name").get<std::string>();
  v.value = j.at("value").get<Rational>();
}

void to_json(json& j, const ScalarResult& r) { j = json{{"values", r.values}}; }
void from_json(const json& j, ScalarResult& r) { r.values = j.at("values").get<std::vector<NamedValue>>(); }

void to_json(json& j, const Table& t) { j = json{{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}}; }

void from_json(const json& j, Table& t) {
  t.title = j.at("title").get<std::string>();
  t.columns = j.at("columns").get<std::vector<std::string>>();
  t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
}

void to_json(json& j, const SurfaceGrid& g) {
  j = json{{"objective", g.objective},
           {"s_values", doubles_to_json(g.s_values)},
           {"t_values", doubles_to_json(g.t_values)},
           {"values", doubles_to_json(g.values)}};
}

void from_json(const json& j, SurfaceGrid& g) {
  g.objective = j.at("objective").get<Objective>();
  g.s_values = doubles_from_json(j.at("s_values"));
  g.t_values = doubles_from_json(j.at("t_values"));
  g.values = doubles_from_json(j.at("values"));
  if (g.values.size() != g.s_values.size() * g.t_values.size())
    throw std::invalid_argument("surface values do not match the grid shape");
}

std::string payload_kind(const Payload& payload) {
  static constexpr const char* names[] = {"scalars", "table", "coverage_plan", "proof_report", "surface"};
  return names[payload.index()];
}

json to_json_document(const ReportDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["command"] = doc.command;
  j["params"] = doc.params;
  j["payload"] = {{"kind", payload_kind(doc.payload)},
                  {"data", std::visit([](const auto& v) { return json(v); }, doc.payload)}};
  if (doc.verdict) j["verdict"] = *doc.verdict;
  if (doc.generated_at) j["generated_at"] = *doc.generated_at;
  return j;
}

ReportDocument from_json_document(const json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  if (doc.schema_version != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version: " + doc.schema_version);
  doc.command = j.at("command").get<std::string>();
  doc.params = j.value("params", json::object());
  const auto& payload = j.at("payload");
  const auto kind = payload.at("kind").get<std::string>();
  const auto& data = payload.at("data");
  if (kind == "scalars") {
    doc.payload = data.get<ScalarResult>();
  } else if (kind == "table") {
    doc.payload = data.get<Table>();
  } else if (kind == "coverage_plan") {
    doc.payload = data.get<CoveragePlan>();
  } else if (kind == "proof_report") {
    doc.payload = data.get<ProofReport>();
  } else if (kind == "surface") {
    doc.payload = data.get<SurfaceGrid>();
  } else {
    throw std::invalid_argument("unknown payload kind: " + kind);
  }
  doc.verdict = opt_from_json<std::string>(j, "verdict");
  doc.generated_at = opt_from_json<std::string>(j, "generated_at");
  return doc;
}

std::string serialize(const ReportDocument& doc) { return to_json_document(doc).dump(2) + "\n"; }

ReportDocument parse_document(std::string_view text) {
  return from_json_document(json::parse(text.begin(), text.end()));
}

}  // namespace hkb
