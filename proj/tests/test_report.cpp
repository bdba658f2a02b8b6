#include <doctest.h>

#include <cmath>

#include "hkb/report.hpp"

using namespace hkb;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

ReportDocument round_trip(const ReportDocument& doc) {
  const std::string text = serialize(doc);
  const ReportDocument back = parse_document(text);
  CHECK(serialize(back) == text);
  return back;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("rationals serialize as exact strings plus a float") {
    const nlohmann::json j = q(-6, 4);
    CHECK(j.at("exact") == "-3/2");
    CHECK(j.at("float") == -1.5);
    CHECK(j.get<Rational>() == q(-3, 2));
    CHECK(nlohmann::json("71/67").get<Rational>() == q(71, 67));
    CHECK(nlohmann::json(5).get<Rational>() == q(5));
    CHECK_THROWS(nlohmann::json(0.5).get<Rational>());
  }

  TEST_CASE("every objective kind round-trips") {
    const Objective objectives[] = {
        HBoundObjective{q(7), 7, 1},
        GeneralBoundObjective{BoundSpec{8, q(21), 19, 4, {{2, q(1, 3)}}}},
        RangeMinObjective{q(13), q(19), 7, 1},
        MuSmallObjective{q(6), 3, 7},
        NotNormalObjective{2},
        MultiplicityRatioObjective{q(5341), 7},
    };
    for (const auto& obj : objectives) {
      const nlohmann::json j = obj;
      CHECK(j.at("kind") == objective_kind(obj));
      CHECK(j.get<Objective>() == obj);
    }
    CHECK_THROWS(nlohmann::json{{"kind", "bogus"}}.get<Objective>());
  }

  TEST_CASE("scalar and table payloads") {
    ReportDocument doc;
    doc.command = "nu";
    doc.params = {{"d", "7"}, {"s", "7/2"}};
    doc.payload = ScalarResult{{{"nu", q(1, 2)}, {"density", q(1, 3)}}};
    CHECK(round_trip(doc) == doc);

    doc.payload = Table{"t", {"a", "b"}, {{"1", "2"}, {"3", "4"}}};
    doc.verdict = "certified";
    doc.generated_at = "2026-01-01T00:00:00Z";
    CHECK(round_trip(doc) == doc);
  }

  TEST_CASE("coverage plan and proof report payloads") {
    const SearchParams params;
    ReportDocument plan_doc;
    plan_doc.command = "cover";
    plan_doc.payload = cover_range(7, 1, 3, 60, q(71, 67), params);
    plan_doc.verdict = "open";
    const ReportDocument back = round_trip(plan_doc);
    CHECK(back == plan_doc);
    CHECK(verify_plan(std::get<CoveragePlan>(back.payload)));

    ReportDocument proof_doc;
    proof_doc.command = "prove";
    const ProofReport report = prove_dimension(8, 4, params);
    proof_doc.payload = report;
    proof_doc.verdict = report.verdict();
    const ReportDocument proof_back = round_trip(proof_doc);
    CHECK(proof_back == proof_doc);
    const auto& r = std::get<ProofReport>(proof_back.payload);
    for (const auto& c : r.cases)
      if (c.certificate) CHECK(c.certificate->recheck());
  }

  TEST_CASE("surface payload") {
    ReportDocument doc;
    doc.command = "surface";
    doc.payload = surface_grid(HBoundObjective{q(7), 7, 1}, 5, 4, 0.0, 8.0, 0.0, 1.0);
    CHECK(round_trip(doc) == doc);
  }

  TEST_CASE("exact strings are always reduced") {
    ReportDocument doc;
    doc.command = "nu";
    doc.payload = ScalarResult{{{"x", q(10, 4)}}};
    const auto j = nlohmann::json::parse(serialize(doc));
    CHECK(j.at("payload").at("data").at("values").at(0).at("value").at("exact") == "5/2");
  }

  TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS(parse_document("{"));
    CHECK_THROWS(parse_document(R"({"schema_version": "9.9", "command": "x", "payload": {}})"));
    CHECK_THROWS(parse_document(R"({"schema_version": "1.0", "command": "x",
                                    "payload": {"kind": "nope", "data": {}}})"));
    CHECK_THROWS(parse_document(R"({"schema_version": "1.0", "command": "x",
                                    "payload": {"kind": "scalars", "data": {"values": [{"name": "a", "value": {"exact": "1/0"}}]}}})"));
  }
}
