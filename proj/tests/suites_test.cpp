#include <gtest/gtest.h>

#include "partlog/suites.hpp"

using namespace partlog;

namespace {
void expect_all_pass(const std::string& name) {
  SuiteOptions opt;
  opt.jobs = 2;
  const auto results = run_suite(name, opt);
  EXPECT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.passed) << name << ": " << r.name << " " << r.detail;
}
}  // namespace

TEST(Suites, Names) {
  EXPECT_EQ(suite_names().size(), 6u);
  EXPECT_THROW(run_suite("missing"), ValidationError);
}

TEST(Suites, Figure3) { expect_all_pass("figure3"); }
TEST(Suites, CommonDits) { expect_all_pass("common-dits"); }
TEST(Suites, BooleanCore) { expect_all_pass("boolean-core"); }
TEST(Suites, Identities) { expect_all_pass("identities"); }
TEST(Suites, Tautologies) { expect_all_pass("tautologies"); }

TEST(Suites, Corpora) {
  EXPECT_GE(classical_tautology_corpus().size(), 10u);
  for (const auto& text : classical_tautology_corpus()) EXPECT_TRUE(is_subset_tautology(parse(text))) << text;
  for (const auto& text : non_tautology_corpus()) EXPECT_FALSE(is_subset_tautology(parse(text))) << text;
}
