#include "polynorm/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "support/fixtures.hpp"

namespace polynorm {
namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Outcome o = run(args);
  EXPECT_EQ(o.code, cli::kOk) << o.err;
  return json::parse(o.out);
}

TEST(Cli, NormExamples) {
  const json doc = run_json({"norm", testing::kBorromeanText, "--phi", "1,1,1"});
  EXPECT_EQ(doc.at("format"), "polynorm/1");
  EXPECT_EQ(doc.at("command"), "norm");
  EXPECT_EQ(doc.at("variables"), (json{"t1", "t2", "t3"}));
  EXPECT_EQ(doc.at("result").at("value"), "3");
  EXPECT_EQ(doc.at("result").at("active_pair").at("alpha"), (json{"1", "1", "1"}));

  EXPECT_EQ(run_json({"norm", testing::kBorromeanText, "--phi", "0,0,0"})
                .at("result").at("value"),
            "0");
  EXPECT_EQ(run_json({"norm", testing::kGreatCircleText, "--phi", "1,-1,0,0,0,0"})
                .at("result").at("value"),
            "0");
  EXPECT_EQ(run_json({"norm", testing::kBorromeanText, "--phi", "1/2,-1/3,0",
                      "--method", "width"})
                .at("result").at("value"),
            "5/6");
}

TEST(Cli, SpecializeMethodReportsIndeterminate) {
  const json doc = run_json({"norm", "t1 - t2 + t1^2 - t2^2", "--phi", "1,1",
                             "--method", "specialize"});
  EXPECT_EQ(doc.at("result").at("value"), "indeterminate");
  const json spec = run_json({"specialize", "t1 - t2", "--phi", "1,1"});
  EXPECT_EQ(spec.at("result").at("degree_span"), "indeterminate");
}

TEST(Cli, BallExamples) {
  const json b = run_json({"ball", testing::kBorromeanText});
  EXPECT_EQ(b.at("result").at("essential_dim"), 3);
  EXPECT_EQ(b.at("result").at("reduced_ball").at("vertices").size(), 6u);

  const json gc = run_json({"ball", testing::kGreatCircleText, "--symmetric-fastpath"});
  const json& r = gc.at("result");
  EXPECT_EQ(r.at("inessential_dim"), 4);
  EXPECT_EQ(r.at("route"), "symmetric");
  EXPECT_EQ(r.at("cross_checked"), true);
  EXPECT_EQ(r.at("reduced_ball").at("vertices"),
            json::parse(R"([["-1/4","-1/4"],["-1/4","1/4"],["1/4","-1/4"],["1/4","1/4"]])"));
}

TEST(Cli, ReduceExamples) {
  const json gc = run_json({"reduce", testing::kGreatCircleText});
  EXPECT_EQ(gc.at("result").at("essential_dim"), 2);
  EXPECT_EQ(gc.at("result").at("degenerate_directions").size(), 4u);
  const json b = run_json({"reduce", testing::kBorromeanText});
  EXPECT_EQ(b.at("result").at("lattice_basis"),
            (json{{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}));
  EXPECT_EQ(run_json({"reduce", "5*t1^2*t2"}).at("result").at("essential_dim"), 0);
}

TEST(Cli, DecomposeExamples) {
  const json b = run_json({"decompose", "t1-1", "t2-1", "t3-1", "--vars", "t1,t2,t3",
                           "--phi", "1,1,1"});
  EXPECT_EQ(b.at("result").at("total"), "3");
  EXPECT_EQ(b.at("result").at("direct"), "3");

  const json gc = run_json({"decompose", "(t1*t2*t3*t4*t5*t6-1)^2",
                            "(t1^-1*t2^-1*t3^-1*t4*t5*t6-1)^2", "--phi",
                            "1,1,1,1,1,1"});
  EXPECT_EQ(gc.at("result").at("total"), "12");
  EXPECT_EQ(gc.at("result").at("factors").at(0).at("multiplicity"), 2);

  const json cube = run_json({"decompose", "(t1^2 + t2 - 3)^3", "--phi", "1,5"});
  EXPECT_EQ(cube.at("result").at("total"), "15");
}

TEST(Cli, ExitCodes) {
  const Outcome mono = run({"ball", "t1^3"});
  EXPECT_EQ(mono.code, cli::kWholeDualSpace);
  EXPECT_NE(mono.err.find("norm identically zero; unit ball is the whole dual space"),
            std::string::npos);
  EXPECT_EQ(run({"norm", "t1 +", "--phi", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"norm", "t1 + t2", "--phi", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"norm", "t1 - t1", "--vars", "t1", "--phi", "1"}).code,
            cli::kZeroPolynomial);
  EXPECT_EQ(run({"ball", "0", "--vars", "t1"}).code, cli::kZeroPolynomial);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run({"norm", "t1", "--phi", "1", "--format", "yaml"}).code,
            cli::kUsageError);
  EXPECT_EQ(run({"norm", "@/nonexistent/poly.txt", "--phi", "1"}).code,
            cli::kUsageError);
}

TEST(Cli, FileArgument) {
  const std::string path = ::testing::TempDir() + "polynorm_cli_input.txt";
  {
    std::ofstream f(path);
    f << testing::kBorromeanText << '\n';
  }
  const json doc = run_json({"norm", "@" + path, "--phi", "2,-1,1/2"});
  EXPECT_EQ(doc.at("result").at("value"), "7/2");
  std::remove(path.c_str());
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* fmt : {"text", "json"}) {
    const std::vector<std::string> args{"ball", testing::kGreatCircleText, "--format", fmt};
    const Outcome a = run(args);
    const Outcome b = run(args);
    EXPECT_EQ(a.code, cli::kOk);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, TextFormat) {
  const Outcome o = run({"norm", testing::kBorromeanText, "--phi", "1,1,1"});
  EXPECT_EQ(o.code, cli::kOk);
  EXPECT_NE(o.out.find("format: polynorm/1\n"), std::string::npos);
  EXPECT_NE(o.out.find("value: 3\n"), std::string::npos);
}

TEST(Cli, JsonRationalsAreStrings) {
  const json doc = run_json({"ball", testing::kBorromeanText});
  for (const auto& v : doc.at("result").at("reduced_ball").at("vertices")) {
    for (const auto& x : v) EXPECT_TRUE(x.is_string());
  }
  for (const auto& h : doc.at("result").at("reduced_ball").at("facets")) {
    EXPECT_TRUE(h.at("offset").is_string());
  }
}

}  // namespace
}  // namespace polynorm
