#include <gtest/gtest.h>

#include <set>
#include <string>

#include "iterid/experiments.hpp"

namespace iterid {
namespace {

using nlohmann::json;

TEST(ExperimentsTest, CatalogNames) {
  std::set<std::string> names;
  for (const auto& e : list_experiments()) {
    names.insert(e.name);
    EXPECT_TRUE(e.default_params.is_object()) << e.name;
    EXPECT_FALSE(e.summary.empty());
  }
  EXPECT_EQ(names.size(), 17U);
  for (const char* n : {"ex-2.2-wreath-nilpotent", "prop-6.1-zwrz", "prop-6.2-lamplighter", "grig-torsion",
                        "thm-8.1-metabelian-evidence", "lem-4.5-extension-bound", "rm-6-return-times"}) {
    EXPECT_TRUE(names.count(n)) << n;
  }
}

TEST(ExperimentsTest, ReportShape) {
  const auto r = run_experiment("ex-3.4-abelian-depth", json::object(), 1);
  EXPECT_TRUE(r.passed);
  const json j = r.to_json();
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["name"], "ex-3.4-abelian-depth");
  EXPECT_EQ(j["seed"], 1);
  EXPECT_EQ(j["params"]["d"], 2);
}

TEST(ExperimentsTest, DeterministicAcrossRunsAndWorkers) {
  const json params = {{"groups", {"sym(4)", "alt(5)"}}, {"words", {"w_BWW"}}};
  auto a = run_experiment("rm-2.5-solvability-words", params, 3, 1);
  auto b = run_experiment("rm-2.5-solvability-words", params, 3, 1);
  auto c = run_experiment("rm-2.5-solvability-words", params, 3, 4);
  a.duration_ms = b.duration_ms = c.duration_ms = 0;
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(a.to_json().dump(), c.to_json().dump());
  EXPECT_TRUE(a.passed);
}

TEST(ExperimentsTest, Prop61Witness) {
  const auto r = run_experiment("prop-6.1-zwrz", {{"tuples", 50}}, 1);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.evidence["witness_depth"], 2);
  EXPECT_EQ(r.evidence["witness"]["step2"], "e");
  EXPECT_NE(r.evidence["witness"]["step1"], "e");
}

TEST(ExperimentsTest, InvalidInput) {
  EXPECT_THROW(run_experiment("no-such", json::object(), 0), std::invalid_argument);
  EXPECT_THROW(run_experiment("prop-6.1-zwrz", {{"bogus", 1}}, 0), std::invalid_argument);
  EXPECT_THROW(run_experiment("prop-6.1-zwrz", {{"tuples", "many"}}, 0), std::invalid_argument);
  EXPECT_THROW(run_experiment("prop-6.1-zwrz", {{"tuples", 0}}, 0), std::invalid_argument);
  EXPECT_THROW(run_experiment("prop-6.1-zwrz", json::array(), 0), std::invalid_argument);
  EXPECT_THROW(run_experiment("rm-2.5-solvability-words", {{"groups", json::array()}}, 0), std::invalid_argument);
}

}  // namespace
}  // namespace iterid
