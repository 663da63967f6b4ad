#include <fanoquot/report.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <sys/wait.h>

using namespace fanoquot;

namespace {

AnalysisRequest generators_request(const std::string& text) {
  AnalysisRequest req;
  req.generators = text;
  req.format = OutputFormat::Json;
  return req;
}

Json run_json(const AnalysisRequest& req) {
  const auto res = run(req);
  EXPECT_EQ(res.exit_code, kExitOk) << res.error;
  return Json::parse(res.output);
}

struct Process {
  int exit_code = -1;
  std::string out;
};

Process run_cli(const std::string& args) {
  const std::string cmd = std::string(FANOQUOT_CLI) + " " + args + " 2>/dev/null";
  Process p;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) p.out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  p.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

TEST(GeneratorInput, AllThreeForms) {
  const auto a = parse_generator_set(R"J({"degree": 6, "generators": ["(1 2 3)", "(4 5)"]})J");
  EXPECT_EQ(a.degree, 6u);
  ASSERT_EQ(a.generators.size(), 2u);
  EXPECT_EQ(a.generators[1], parse_cycles("(4 5)", 6));

  const auto b = parse_generator_set(R"J(["(1 2 3)", "(4 5)"])J");
  EXPECT_EQ(b.degree, 5u);

  const auto c = parse_generator_set("(1 2 3); (4 5)");
  EXPECT_EQ(c.degree, 5u);
  EXPECT_EQ(c.generators, b.generators);

  EXPECT_EQ(parse_generator_set("(1 2)", 4).degree, 4u);
  EXPECT_EQ(generator_set_to_json(a).dump(), R"J({"degree":6,"generators":["(1 2 3)","(4 5)"]})J");
  EXPECT_THROW(parse_generator_set(R"J({"degree": 3, "generators": ["(1 2 3 4)"]})J"), ParseError);
  EXPECT_THROW(parse_generator_set(R"J({"degree": 3, "generators": []})J", 4), std::invalid_argument);
}

TEST(TableInput, JsonRoundTrip) {
  const auto t = dihedral_table(3);
  const auto back = table_from_json(table_to_json(t));
  EXPECT_EQ(back.rows(), t.rows());
  EXPECT_THROW(table_from_json(Json::parse(R"J({"size": 3, "table": [[0,1],[1,0]]})J")), InvalidTable);
}

TEST(Run, FiveCycleWithEndomorphism) {
  auto req = generators_request("(1 2 3 4 5)");
  req.endo_d = 2;
  const Json j = run_json(req);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["group"]["order"], 5);
  EXPECT_EQ(j["lemma_shortcut"], true);
  EXPECT_EQ(j["verdict"]["kind"], "Terminal");
  EXPECT_EQ(j["verdict"]["min_age"], "2");
  EXPECT_EQ(j["endo"]["degree"], "16");
  EXPECT_EQ(j["endo"]["valid"], true);
}

TEST(Run, TranspositionIsInconclusive) {
  // in S_2 both charts of (1 2) have a single tangent weight
  const Json j = run_json(generators_request("(1 2)"));
  EXPECT_EQ(j["verdict"]["kind"], "InconclusiveQuasiReflection");
  ASSERT_EQ(j["verdict"]["witnesses"].size(), 2u);
  for (const auto& w : j["verdict"]["witnesses"]) EXPECT_EQ(w["element"], "(1 2)");

  auto req = generators_request("(1 2)");
  req.degree = 4;
  const Json k = run_json(req);
  ASSERT_EQ(k["verdict"]["witnesses"].size(), 1u);
  EXPECT_EQ(k["verdict"]["witnesses"][0]["chart"], "0");
  EXPECT_EQ(k["verdict"]["witnesses"][0]["age"], "1/2");
}

TEST(Run, MalformedInputIsAnInputError) {
  const auto res = run(generators_request("(1 2"));
  EXPECT_EQ(res.exit_code, kExitInputError);
  EXPECT_TRUE(res.output.empty());
  EXPECT_NE(res.error.find("position"), std::string::npos);
}

TEST(Run, CapExceeded) {
  auto req = generators_request("(1 2); (1 2 3 4 5 6 7)");
  req.cap = 1000;
  EXPECT_EQ(run(req).exit_code, kExitCapExceeded);
  req.cap = 0;
  EXPECT_EQ(run(req).exit_code, kExitInputError);
}

TEST(Run, FamilyAndFixedPoint) {
  AnalysisRequest req;
  req.source = AnalysisRequest::Source::Family;
  req.family = "heisenberg:3";
  req.fixed_point = true;
  req.format = OutputFormat::Json;
  const Json j = run_json(req);
  EXPECT_EQ(j["group"]["degree"], 28);
  EXPECT_EQ(j["group"]["order"], 27);
  EXPECT_EQ(j["lemma_shortcut"], true);
  EXPECT_EQ(j["verdict"]["kind"], "Terminal");
  req.family = "heisenberg:4";
  EXPECT_EQ(run(req).exit_code, kExitInputError);
}

TEST(Run, DigestMultiplicitiesSumToOrder) {
  const Json j = run_json(generators_request("(1 2 3 4)(5 6); (1 3)(7 8)"));
  std::size_t total = 0;
  for (const auto& t : j["cycle_types"]) total += t["multiplicity"].get<std::size_t>();
  EXPECT_EQ(total, j["group"]["order"].get<std::size_t>());
}

TEST(Run, OracleAndVerbose) {
  auto req = generators_request("(1 2 3)(4 5); (1 4)");
  req.oracle = true;
  req.verbose = true;
  req.endo_d = 3;
  const Json j = run_json(req);
  EXPECT_EQ(j["oracle"]["agreed"], true);
  EXPECT_GT(j["oracle"]["checks"].get<std::size_t>(), 0u);
  EXPECT_LT(j["oracle"]["max_error"].get<double>(), 1e-9);
  EXPECT_EQ(j["elements"].size(), j["group"]["order"].get<std::size_t>());
}

TEST(Report, JsonRoundTripIsLossless) {
  for (const char* gens : {"(1 2 3 4 5)", "(1 2)", "(1 2 3)(4 5); (1 4)", "(1 2)(3 4); (1 3)(2 4)"}) {
    auto req = generators_request(gens);
    req.endo_d = 2;
    req.oracle = true;
    req.verbose = true;
    req.timing = true;
    const Json first = run_json(req);
    const Json second = to_json(report_from_json(first));
    EXPECT_EQ(first.dump(), second.dump()) << gens;
  }
}

TEST(Report, TextOutput) {
  auto req = generators_request("(1 2 3 4 5)");
  req.format = OutputFormat::Text;
  req.endo_d = 2;
  const auto res = run(req);
  EXPECT_EQ(res.exit_code, kExitOk);
  EXPECT_NE(res.output.find("verdict: Terminal"), std::string::npos);
  EXPECT_NE(res.output.find("degree 16"), std::string::npos);
}

TEST(Report, OracleDisagreementExitCode) {
  // Disagreement cannot be provoked with a correct implementation; an element
  // whose order exceeds the oracle's range exercises the failure path instead.
  std::string cycles;
  Point next = 1;
  for (std::size_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    cycles += "(";
    for (std::size_t k = 0; k < p; ++k) cycles += std::to_string(next++) + (k + 1 < p ? " " : "");
    cycles += ")";
  }
  OracleSummary s = run_oracle({CycleTypeDigest{analyze_element(parse_cycles(cycles)), 1}});
  EXPECT_FALSE(s.agreed);
  EXPECT_FALSE(s.failure.empty());
}

TEST(Cli, ExitCodesAndDeterminism) {
  const auto ok = run_cli("analyze --generators '(1 2 3 4 5)' --endo-d 2 --format json");
  EXPECT_EQ(ok.exit_code, 0);
  const Json j = Json::parse(ok.out);
  EXPECT_EQ(j["verdict"]["kind"], "Terminal");
  EXPECT_EQ(j["endo"]["degree"], "16");
  EXPECT_EQ(run_cli("analyze --generators '(1 2 3 4 5)' --endo-d 2 --format json").out, ok.out);

  EXPECT_EQ(run_cli("analyze --generators '(1 2'").exit_code, 2);
  EXPECT_EQ(run_cli("analyze --generators '(1 2)(1 3)'").exit_code, 2);
  EXPECT_EQ(run_cli("analyze --generators '(1 2);(1 2 3 4 5 6 7 8)' --cap 100").exit_code, 3);
  EXPECT_EQ(run_cli("analyze").exit_code, 2);
  EXPECT_EQ(run_cli("analyze --generators '(1 2)' --family cyclic:3").exit_code, 2);
  EXPECT_EQ(run_cli("analyze --family cyclic:3 --format yaml").exit_code, 2);
  EXPECT_EQ(run_cli("analyze --table /nonexistent.json").exit_code, 2);
  EXPECT_EQ(run_cli(std::string("analyze --table ") + FANOQUOT_SAMPLES + "/not_a_group_table.json").exit_code, 2);

  const auto klein = run_cli(std::string("analyze --table ") + FANOQUOT_SAMPLES +
                             "/klein_four_table.json --fixed-point --endo-d 2 --format json");
  ASSERT_EQ(klein.exit_code, 0);
  const Json k = Json::parse(klein.out);
  EXPECT_EQ(k["group"]["degree"], 5);
  EXPECT_EQ(k["verdict"]["kind"], "CanonicalNotTerminal");
  EXPECT_EQ(k["verdict"]["extension"], true);
  EXPECT_EQ(k["endo"]["degree"], "16");

  const auto c5 = run_cli(std::string("analyze --generators \"$(cat ") + FANOQUOT_SAMPLES +
                          "/cyclic5_generators.json)\" --oracle --format json");
  ASSERT_EQ(c5.exit_code, 0);
  EXPECT_EQ(Json::parse(c5.out)["oracle"]["agreed"], true);
}

}  // namespace
