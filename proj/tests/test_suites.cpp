#include <gtest/gtest.h>

#include "weilrep/errors.hpp"
#include "weilrep/suites.hpp"
#include "weilrep/tables.hpp"

using namespace weilrep;

TEST(Suites, DftAtOnePassesTrivially) {
  SuiteParams p;
  p.n = 1;
  const auto r = run_suite("dft", p);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.count(Status::Pass), 0u);
}

TEST(Suites, CharacterAtFiveHasOneRecordPerQualifyingElement) {
  SuiteParams p;
  p.n = 5;
  const auto r = run_suite("character", p);
  // det(g - I) = 2 - tr g, so qualifying g are those with trace != 2: 120 - 25
  EXPECT_EQ(r.checks.size(), 95u);
  EXPECT_EQ(r.count(Status::Pass), 95u);
}

TEST(Suites, QrDefaultSweepsAllPairs) {
  SuiteParams p;
  p.primes_up_to = 13;
  p.backend = Backend::Float;
  const auto r = run_suite("qr", p);
  EXPECT_EQ(r.checks.size(), 10u);
  EXPECT_TRUE(r.passed());
  for (const auto& c : r.checks) EXPECT_TRUE(c.residual.has_value());
}

TEST(Suites, ExactRecordsCarryNoResidualExceptSkips) {
  SuiteParams p;
  p.n = 7;
  const auto r = run_suite("equivariance", p);
  for (const auto& c : r.checks) EXPECT_FALSE(c.residual.has_value());
}

TEST(Suites, Errors) {
  EXPECT_THROW(run_suite("nope", {}), UnknownSuite);
  SuiteParams even;
  even.n = 4;
  EXPECT_THROW(run_suite("weil", even), InvalidParams);
}

TEST(Suites, ReportsAreDeterministic) {
  SuiteParams p;
  p.n = 7;
  p.seed = 42;
  const auto a = report_to_json(run_suite("egorov", p), false).dump();
  const auto b = report_to_json(run_suite("egorov", p), false).dump();
  EXPECT_EQ(a, b);
  p.seed = 43;
  EXPECT_NE(a, report_to_json(run_suite("egorov", p), false).dump());
}

TEST(Suites, JsonShape) {
  SuiteParams p;
  p.n = 3;
  const auto j = report_to_json(run_suite("dft", p));
  EXPECT_EQ(j["version"], "1.0");
  EXPECT_EQ(j["suite"], "dft");
  EXPECT_EQ(j["params"]["n"], 3);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(j["elapsed_ms"].is_number());
  EXPECT_TRUE(report_to_json(run_suite("dft", p), false)["elapsed_ms"].is_null());
}

TEST(Tables, GaussSigns) {
  EXPECT_EQ(emit_table("gauss-signs", 7).substr(0, 4), "p,ga");
  const auto t = emit_table("gauss-signs", 7);
  EXPECT_NE(t.find("\n3,i*sqrt(3),"), std::string::npos);
  EXPECT_NE(t.find("\n5,sqrt(5),"), std::string::npos);
  EXPECT_NE(t.find("\n7,i*sqrt(7),"), std::string::npos);
}

TEST(Tables, ReciprocitySingleRow) {
  EXPECT_EQ(emit_table("reciprocity", 5),
            "p,q,legendre_p_q,legendre_q_p,product,parity_sign,agree\n3,5,-1,-1,+1,+1,true\n");
}

TEST(Tables, Constants) {
  const auto t = emit_table("constants", 3);
  EXPECT_NE(t.find("\n3,i*sqrt(3),"), std::string::npos);
  EXPECT_NE(t.find(",-3*sqrt(3)*i,"), std::string::npos);
  EXPECT_THROW(emit_table("other", 3), InvalidParams);
}

TEST(Tables, Labels) {
  EXPECT_EQ(sqrt_power_label(0, 5, 1), "sqrt(5)");
  EXPECT_EQ(sqrt_power_label(2, 5, 5), "-25*sqrt(5)");
  EXPECT_EQ(sqrt_power_label(3, 7, 7), "-343*sqrt(7)*i");
  EXPECT_EQ(sqrt_power_label(1, 9, 2), "9*i");
  EXPECT_EQ(sqrt_power_label(1, 1, 0), "i");
}
