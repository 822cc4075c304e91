#include <gtest/gtest.h>

#include <json.hpp>
#include <set>

#include "cmdiv/verifier.hpp"

using namespace cmdiv;

TEST(Verifier, SuiteNames) {
  for (std::string_view name : {"all", "lemma33", "cor34", "lemma35", "thm36", "images", "ladder", "fixtures",
                                "oracle"}) {
    const auto s = parse_suite(name);
    ASSERT_TRUE(s.has_value()) << name;
    EXPECT_EQ(suite_name(*s), name);
  }
  EXPECT_FALSE(parse_suite("thm37").has_value());
}

TEST(Verifier, FastChecksPass) {
  for (const CheckResult& c : {check_level2_types(), check_examples(), check_example_images(), check_level6(),
                               check_splitting_frequencies()}) {
    EXPECT_TRUE(c.passed) << c.check_id << ": " << c.first_failure.value_or("");
    EXPECT_GT(c.cases_run, 0u) << c.check_id;
  }
}

TEST(Verifier, ImageFamiliesPass) {
  std::set<std::string_view> ids;
  for (const auto& row : image_expectations()) ids.insert(row.check_id);
  EXPECT_EQ(ids, (std::set<std::string_view>{"2adic-general", "j0-2adic", "j0-3adic", "j0-split-primes",
                                             "j1728-2adic"}));
  for (std::string_view id : ids) {
    const CheckResult c = check_image_family(id);
    EXPECT_TRUE(c.passed) << id << ": " << c.first_failure.value_or("");
  }
}

TEST(Verifier, FailuresAreReported) {
  const CheckResult c = check_c1_commutation(6, Execution::serial);
  EXPECT_TRUE(c.passed);
  const std::vector<CheckResult> partial{c};
  const CheckResult cov = check_coverage(partial);
  EXPECT_FALSE(cov.passed);
  ASSERT_TRUE(cov.first_failure.has_value());
  EXPECT_NE(cov.first_failure->find("missing check"), std::string::npos);
}

TEST(Verifier, CoverageOfRequiredIds) {
  std::vector<CheckResult> all;
  for (std::string_view id : required_check_ids()) all.push_back(CheckResult{std::string(id), true, 1, {}});
  EXPECT_TRUE(check_coverage(all).passed);
  EXPECT_EQ(required_check_ids().size(), 21u);
}

TEST(Verifier, ReportJsonSchema) {
  VerifyOptions opts;
  opts.execution = Execution::serial;
  const VerificationReport r = run_suite(Suite::lemma35, opts);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_TRUE(r.all_passed());
  const auto doc = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(doc["summary"]["total"], 1);
  EXPECT_EQ(doc["summary"]["passed"], 1);
  EXPECT_EQ(doc["summary"]["failed"], 0);
  EXPECT_EQ(doc["checks"][0]["check_id"], "level2-types");
  EXPECT_TRUE(doc["checks"][0]["first_failure"].is_null());
  EXPECT_TRUE(doc["tool_version"].is_string());
  EXPECT_EQ(doc["timestamp"].get<std::string>().back(), 'Z');
  // Keys are emitted in sorted order.
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  const std::string text = r.to_json();
  EXPECT_LT(text.find("\"checks\""), text.find("\"summary\""));
  EXPECT_LT(text.find("\"summary\""), text.find("\"timestamp\""));
  EXPECT_NE(r.to_text().find("PASS level2-types"), std::string::npos);
}

TEST(Verifier, ReportIsSortedAndDeterministic) {
  VerifyOptions opts;
  opts.n_max = 8;
  const VerificationReport a = run_suite(Suite::thm36, opts);
  opts.execution = Execution::serial;
  const VerificationReport b = run_suite(Suite::thm36, opts);
  ASSERT_EQ(a.checks.size(), 4u);
  EXPECT_TRUE(std::is_sorted(a.checks.begin(), a.checks.end(),
                             [](const auto& x, const auto& y) { return x.check_id < y.check_id; }));
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].check_id, b.checks[i].check_id);
    EXPECT_EQ(a.checks[i].passed, b.checks[i].passed);
    EXPECT_EQ(a.checks[i].cases_run, b.checks[i].cases_run);
    EXPECT_EQ(a.checks[i].first_failure, b.checks[i].first_failure);
  }
  EXPECT_TRUE(a.all_passed());
}
