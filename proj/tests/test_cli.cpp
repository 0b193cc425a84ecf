#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "cli_app.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  json doc;
  std::string raw;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  const int code = hypersing::cli::run(args, out);
  return {code, json::parse(out.str()), out.str()};
}

std::string sample(const char* name) { return std::string(HYPERSING_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, DecideHomeomorphic) {
  const auto r = run({"decide", "--left", "3,A:5", "--right", "3,A:5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["status"], "ok");
  EXPECT_EQ(r.doc["command"], "decide");
  EXPECT_EQ(r.doc["payload"]["outcome"], "Homeomorphic");
  EXPECT_EQ(r.doc["payload"]["invariants"]["left"]["chi"], "-2");
}

TEST(Cli, Lattice) {
  const auto r = run({"lattice", "--ak", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["payload"]["hyperbolic_count"], "2");
  EXPECT_EQ(r.doc["payload"]["radical_rank"], "1");
  EXPECT_EQ(r.doc["payload"]["link"], "S2xS3");
}

TEST(Cli, GlueNormalize) {
  const auto bad = run({"glue-normalize", "--p", "5", "--lambda", "1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.doc["status"], "error");
  EXPECT_FALSE(bad.doc["diagnostics"].empty());
  const auto ok = run({"glue-normalize", "--p", "28", "--lambda", "1"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.doc["payload"]["b"], "-7");
  EXPECT_EQ(ok.doc["payload"]["c"], "1");
}

TEST(Cli, Chern) {
  const auto r = run({"chern", "--degree", "3"});
  EXPECT_EQ(r.doc["payload"]["chi"], "-6");
  EXPECT_EQ(r.doc["payload"]["p1_coeff"], "-4");
  EXPECT_EQ(run({"chern", "--degree", "0"}).code, 1);
}

TEST(Cli, Invariants) {
  const auto odd = run({"invariants", "--degree", "3", "--singularity", "A:5"});
  EXPECT_EQ(odd.doc["payload"]["kind"], "boundary");
  EXPECT_EQ(odd.doc["payload"]["invariants"]["q"], json::parse(R"([["3","0"],["0","0"]])"));
  const auto even = run({"invariants", "--degree", "3", "--singularity", "A:2"});
  EXPECT_EQ(even.doc["payload"]["kind"], "closed");
  EXPECT_EQ(even.doc["payload"]["invariants"]["chi"], "-4");
  EXPECT_FALSE(even.doc["diagnostics"].empty());
  const auto bad = run({"invariants", "--degree", "4", "--singularity", "A:5"});
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, Recognize) {
  const auto r = run({"recognize", "--poly", sample("family_b_chart.poly"), "--subst", sample("family_b_shift.subst"),
                      "--weights", "1/2,1/2,1/2,1/6"});
  EXPECT_EQ(r.code, 0) << r.raw;
  EXPECT_EQ(r.doc["payload"]["classification"]["tag"], "A_5");
  EXPECT_EQ(r.doc["payload"]["mu_corank"]["tag"], "A_5");
  const auto inline_expr = run({"recognize", "--expr", "z1^6 + z2^2 + z3^2 + z4^2"});
  EXPECT_EQ(inline_expr.doc["payload"]["classification"]["tag"], "A_5");
}

TEST(Cli, Locus) {
  const auto r = run({"locus", "--poly", sample("family_a.poly"), "--point", "1,0,0,0,0"});
  EXPECT_EQ(r.code, 0) << r.raw;
  EXPECT_EQ(r.doc["payload"]["is_unique_at_point"], true);
  EXPECT_EQ(r.doc["payload"]["milnor_number_at_point"], "5");
}

TEST(Cli, VerifyFamily) {
  const auto r = run({"verify-family", "--family", "B", "--a", "-2/3", "--b", "7/5"});
  EXPECT_EQ(r.code, 0) << r.raw;
  EXPECT_EQ(r.doc["payload"]["passed"], true);
  const auto a = run({"verify-family", "--family", "A", "--a", "1", "--b", "1"});
  EXPECT_FALSE(a.doc["diagnostics"].empty());
  EXPECT_EQ(run({"verify-family", "--family", "A", "--a", "0", "--b", "1"}).code, 1);
  EXPECT_EQ(run({"verify-family", "--family", "C", "--a", "1", "--b", "1"}).code, 2);
}

TEST(Cli, UsageErrors) {
  const auto none = run({});
  EXPECT_EQ(none.code, 2);
  EXPECT_EQ(none.doc["status"], "error");
  const auto missing = run({"decide", "--left", "3,A:5"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.doc["diagnostics"][1].get<std::string>().find("--right"), std::string::npos);
  EXPECT_EQ(run({"recognize", "--poly", sample("a5_normal_form.poly"), "--expr", "z1^2"}).code, 2);
  EXPECT_EQ(run({"recognize"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, DomainErrorsCarryModuleMessages) {
  const auto r = run({"recognize", "--expr", "z1^2 + y"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.doc["diagnostics"][0].get<std::string>().find("unknown variable"), std::string::npos);
  EXPECT_EQ(run({"recognize", "--poly", "/nonexistent/file.poly"}).code, 1);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"decide", "--left", "3,A:5", "--right", "2,A:3"};
  EXPECT_EQ(run(args).raw, run(args).raw);
  const std::vector<std::string> lat{"lattice", "--ak", "7"};
  EXPECT_EQ(run(lat).raw, run(lat).raw);
}

TEST(Cli, PayloadSchemaRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"chern", "--degree", "5"},
                                                                {"lattice", "--ak", "4"},
                                                                {"glue-normalize", "--p", "4", "--lambda", "1"},
                                                                {"decide", "--left", "3,A:2", "--right", "3,A:2"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0);
    for (const char* key : {"command", "status", "payload", "diagnostics"}) EXPECT_TRUE(r.doc.contains(key));
    EXPECT_EQ(r.doc.size(), 4u);
    EXPECT_EQ(json::parse(r.doc.dump(2)), r.doc);
    EXPECT_EQ(r.doc.dump(2) + "\n", r.raw);
  }
}

TEST(Cli, PayloadKeysMatchDocumentedSchema) {
  using Keys = std::set<std::string>;
  const std::vector<std::pair<std::vector<std::string>, Keys>> cases{
      {{"chern", "--degree", "4"}, {"degree", "c1", "c2", "c3", "chi", "p1_coeff", "spin"}},
      {{"lattice", "--ak", "5"}, {"k", "matrix", "transform", "hyperbolic_count", "hyperbolic_divisors", "radical_rank", "link"}},
      {{"invariants", "--degree", "3", "--singularity", "A:5"}, {"degree", "singularity", "kind", "invariants"}},
      {{"decide", "--left", "3,A:5", "--right", "3,A:5"}, {"left", "right", "outcome", "reasons", "invariants", "witness"}},
      {{"decide", "--left", "3,A:5", "--right", "2,A:3"}, {"left", "right", "outcome", "reasons", "invariants"}},
      {{"recognize", "--expr", "z1^4 + z2^2 + z3^2 + z4^2"}, {"input", "variables", "classification", "mu_corank"}},
      {{"recognize", "--poly", sample("family_b_chart.poly"), "--subst", sample("family_b_shift.subst")},
       {"input", "variables", "classification", "mu_corank", "substituted"}},
      {{"locus", "--poly", sample("family_a.poly"), "--point", "1,0,0,0,0"},
       {"polynomial", "point", "chart_germ", "charts", "is_unique_at_point", "milnor_number_at_point", "notes"}},
      {{"verify-family", "--family", "A", "--a", "1", "--b", "1"},
       {"family", "a", "b", "F", "F0", "chart_germ", "stages", "passed", "mu_corank"}},
      {{"verify-family", "--family", "B", "--a", "1", "--b", "1"},
       {"family", "a", "b", "F", "F0", "chart_germ", "stages", "passed", "mu_corank", "recognition"}},
      {{"glue-normalize", "--p", "28", "--lambda", "1"}, {"p", "lambda", "wall_congruence", "b", "c", "p_after", "lambda_after"}},
  };
  for (const auto& [args, expected] : cases) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << args[0];
    EXPECT_EQ(r.doc["status"], "ok");
    Keys got;
    for (const auto& item : r.doc["payload"].items()) got.insert(item.key());
    EXPECT_EQ(got, expected) << args[0];
  }
}
