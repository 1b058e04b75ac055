#include <gtest/gtest.h>

#include "pcmtk/compliance.hpp"

using namespace pcmtk;

namespace {

Expected expect(std::string_view index, std::string_view axiom) {
  const auto e = find_expectation(expected_matrix(), index, axiom);
  EXPECT_TRUE(e) << index << " " << axiom;
  return e ? e->expected : Expected::Unknown;
}

CheckConfig small() {
  CheckConfig cfg;
  cfg.trials = 300;
  return cfg;
}

}  // namespace

TEST(Expectations, CoverEveryIndexAndDefaultAxiom) {
  const auto es = expected_matrix();
  EXPECT_EQ(es.size(), 8u * 20u);
  for (const auto& h : registry())
    for (const auto& ax : default_axioms()) EXPECT_TRUE(find_expectation(es, h.name, ax.id)) << h.name << " " << ax.id;
  for (const auto& e : es) EXPECT_FALSE(e.source.empty());
}

TEST(Expectations, SpotChecks) {
  EXPECT_EQ(expect("hci", "bf_a3"), Expected::Dissatisfies);
  EXPECT_EQ(expect("gw", "bf_a3"), Expected::Dissatisfies);
  EXPECT_EQ(expect("re", "bf_a4"), Expected::Dissatisfies);
  EXPECT_EQ(expect("re", "bf_a5"), Expected::Dissatisfies);
  EXPECT_EQ(expect("ci", "ku_a2"), Expected::Dissatisfies);
  EXPECT_EQ(expect("ci", "ku_a4"), Expected::Dissatisfies);
  EXPECT_EQ(expect("ci", "mz_bounded"), Expected::Dissatisfies);
  EXPECT_EQ(expect("ki", "mz_bounded"), Expected::Satisfies);
  EXPECT_EQ(expect("gw", "bf_a4"), Expected::Unknown);
  EXPECT_EQ(expect("ci", "ks_a1"), Expected::Unknown);
  for (const char* cs : {"cs_1", "cs_2", "cs_3", "cs_4", "cs_5", "cs_6"}) EXPECT_EQ(expect("ki", cs), Expected::Satisfies);
  for (const auto& h : registry()) EXPECT_EQ(expect(h.name, "bf_a1"), Expected::Satisfies);
}

TEST(Expectations, JsonRoundTrip) {
  const auto es = expected_matrix();
  EXPECT_EQ(expectations_from_json(expectations_to_json(es)), es);
  EXPECT_THROW(expectations_from_json(Json::parse(R"([{"index":"ci"}])")), PcmError);
  EXPECT_THROW(expected_from_string("Maybe"), PcmError);
}

TEST(Classify, AllCombinations) {
  EXPECT_EQ(classify(VerdictKind::Falsified, Expected::Dissatisfies), Agreement::Agree);
  EXPECT_EQ(classify(VerdictKind::NotFalsified, Expected::Satisfies), Agreement::Agree);
  EXPECT_EQ(classify(VerdictKind::Falsified, Expected::Satisfies), Agreement::Disagree);
  EXPECT_EQ(classify(VerdictKind::NotFalsified, Expected::Dissatisfies), Agreement::Disagree);
  EXPECT_EQ(classify(VerdictKind::Heuristic, Expected::Dissatisfies), Agreement::Heuristic);
  EXPECT_EQ(classify(VerdictKind::Heuristic, Expected::Unknown), Agreement::Heuristic);
  EXPECT_EQ(classify(VerdictKind::Falsified, Expected::Unknown), Agreement::Unknown);
  EXPECT_EQ(classify(VerdictKind::Inapplicable, Expected::Satisfies), Agreement::Unknown);
}

TEST(RunCompliance, SingleCell) {
  const ComplianceMatrix m = run_compliance({"hci"}, {"bf_a3"}, small());
  ASSERT_EQ(m.cells.size(), 1u);
  EXPECT_EQ(m.at(0, 0).verdict.kind, VerdictKind::Falsified);
  const DiffReport r = diff_report(m);
  EXPECT_EQ(r.counts.at(Agreement::Agree), 1u);
  EXPECT_FALSE(r.has_disagree());
  EXPECT_EQ(m.metadata.seed, 42u);
  EXPECT_EQ(m.metadata.ku_a3_measure, "absolute");
}

TEST(RunCompliance, ForgedExpectationProducesDisagree) {
  ComplianceMatrix m = run_compliance({"ki"}, {"ku_a4"}, small());
  for (auto& e : m.expectations)
    if (e.index == "ki" && e.axiom == "ku_a4") e.expected = Expected::Dissatisfies;
  const DiffReport r = diff_report(m);
  EXPECT_TRUE(r.has_disagree());
  EXPECT_NE(r.cells[0].note.find("no counterexample"), std::string::npos);
  EXPECT_NE(markdown_report(m, r).find("A4:N!"), std::string::npos);
}

TEST(RunCompliance, CheckerErrorIsRecordedAsUnknown) {
  CheckConfig cfg = small();
  cfg.orders = {2};
  const ComplianceMatrix m = run_compliance({"ci"}, {"bf_a1"}, cfg);
  ASSERT_TRUE(m.at(0, 0).error);
  EXPECT_EQ(diff_report(m).cells[0].agreement, Agreement::Unknown);
}

TEST(RunCompliance, RejectsUnknownNames) {
  EXPECT_THROW(run_compliance({"ci"}, {"bf_a9"}, small()), PcmError);
  EXPECT_THROW(run_compliance({"nope"}, {"bf_a1"}, small()), PcmError);
  EXPECT_THROW(run_compliance({}, {"bf_a1"}, small()), PcmError);
}

TEST(Reports, ByteIdenticalAcrossRuns) {
  const std::vector<std::string> idx{"ci", "ki", "hci"};
  const auto axioms = default_axiom_ids();
  const ComplianceMatrix a = run_compliance(idx, axioms, small());
  const ComplianceMatrix b = run_compliance(idx, axioms, small());
  EXPECT_EQ(machine_record(a, diff_report(a)), machine_record(b, diff_report(b)));
  EXPECT_EQ(markdown_report(a, diff_report(a)), markdown_report(b, diff_report(b)));
}

TEST(Reports, MachineRecordIsParseableAndComplete) {
  const ComplianceMatrix m = run_compliance({"gw"}, default_axiom_ids(), small());
  const DiffReport r = diff_report(m);
  const Json j = Json::parse(machine_record(m, r));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["cells"].size(), 20u);
  EXPECT_EQ(j["metadata"]["trials"], 300u);
  std::size_t total = 0;
  for (const auto& [k, v] : j["summary"].items()) total += v.get<std::size_t>();
  EXPECT_EQ(total, 20u);
  for (const auto& c : j["cells"])
    if (c["verdict"]["kind"] == "Falsified") { EXPECT_TRUE(c["verdict"].contains("witness")); }
}

TEST(Reports, MarkdownHasCaveatAndOneRowPerCell) {
  const ComplianceMatrix m = run_compliance({"ci", "re"}, default_axiom_ids(), small());
  const std::string md = markdown_report(m, diff_report(m));
  EXPECT_NE(md.find(std::string(kReportCaveat)), std::string::npos);
  std::size_t rows = 0;
  for (std::size_t p = md.find("\n| ci | "); p != std::string::npos; p = md.find("\n| ci | ", p + 1)) ++rows;
  for (std::size_t p = md.find("\n| re | "); p != std::string::npos; p = md.find("\n| re | ", p + 1)) ++rows;
  EXPECT_EQ(rows, 2u * 20u + 2u);
}
