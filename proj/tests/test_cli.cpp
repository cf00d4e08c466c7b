#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jobs.hpp"
#include "okounkov/errors.hpp"
#include "render_svg.hpp"
#include "oracles.hpp"

using namespace okounkov;
using namespace okounkov::tools;
namespace fs = std::filesystem;

namespace {

const fs::path kJobs = fs::path(OKOUNKOV_TEST_FIXTURE_DIR) / "jobs";

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("okounkov_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_job(const std::string& name, const json& job) {
    fs::path p = dir_ / (name + ".json");
    std::ofstream(p) << job.dump();
    return p;
  }

  int run(const fs::path& job, std::string* err_text = nullptr, RunOptions opts = {}) {
    opts.out_dir = (dir_ / "out").string();
    std::ostringstream err;
    int code = run_job_file(job.string(), opts, err);
    if (err_text) *err_text = err.str();
    return code;
  }

  json output(const std::string& stem) {
    std::ifstream in(dir_ / "out" / (stem + ".json"));
    return json::parse(in);
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

json nagata_job(const json& d) {
  return {{"schema", 1}, {"kind", "nagata"}, {"input", {{"r", 9}, {"d", d}, {"m", json::array({"1", "1", "1", "1", "1", "1", "1", "1", "1"})}}}};
}

}  // namespace

TEST_F(Cli, EveryShippedJobSucceeds) {
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(kJobs)) {
    std::string err;
    EXPECT_EQ(run(entry.path(), &err), kExitOk) << entry.path() << "\n" << err;
    json doc = output(entry.path().stem().string());
    EXPECT_EQ(doc["status"], "ok") << entry.path();
    EXPECT_EQ(doc["schema"], 1);
    ++count;
  }
  EXPECT_EQ(count, 15u);
}

TEST_F(Cli, ResultsOfSelectedJobs) {
  ASSERT_EQ(run(kJobs / "bl2_eps_xi.json"), kExitOk);
  json eps = output("bl2_eps_xi");
  EXPECT_EQ(eps["result"]["xi"], "1/2");
  EXPECT_EQ(eps["result"]["epsilon"]["coeff"], "1/2");

  ASSERT_EQ(run(kJobs / "bl2_seshadri.json"), kExitOk);
  EXPECT_EQ(output("bl2_seshadri")["result"]["epsilon"]["coeff"], "1/3");

  ASSERT_EQ(run(kJobs / "p2_toric_body.json"), kExitOk);
  Polytope p = polytope_from_json(output("p2_toric_body")["result"]["polytope"]);
  EXPECT_EQ(p, hull({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2));
  EXPECT_TRUE(fs::exists(dir_ / "out" / "p2_toric_body.svg"));
}

TEST_F(Cli, CheckFailureExitsWithTwo) {
  // a body twice too large makes xi disagree with eps
  json job = json::parse(R"({"schema": 1, "kind": "eps-xi-check",
      "input": {"model": {"s": 1}, "class": {"d": "1", "m": ["0"]}, "n": 2, "weights": [1],
                "body": {"ambient_dim": 2, "vertices": [["0", "0"], ["2", "0"], ["2", "2"]]}}})");
  std::string err;
  EXPECT_EQ(run(write_job("wrong_body", job), &err), kExitCheckFailed);
  EXPECT_EQ(output("wrong_body")["status"], "check-failed");
  EXPECT_NE(err.find("check failed"), std::string::npos);
}

TEST_F(Cli, MalformedRationalNamesItsPath) {
  std::string err;
  EXPECT_EQ(run(write_job("bad_rat", nagata_job("1/0")), &err), kExitInputError);
  EXPECT_NE(err.find("$.input.d"), std::string::npos) << err;
  EXPECT_FALSE(fs::exists(dir_ / "out" / "bad_rat.json"));
}

TEST_F(Cli, SchemaProblemsAreListed) {
  std::string err;
  EXPECT_EQ(run(write_job("no_kind", json{{"schema", 1}, {"input", json::object()}}), &err), kExitInputError);
  EXPECT_NE(err.find("$.kind"), std::string::npos) << err;
  EXPECT_EQ(run(write_job("bad_kind", json{{"schema", 1}, {"kind", "volume"}, {"input", json::object()}}), &err),
            kExitInputError);
  EXPECT_EQ(run(write_job("bad_schema", json{{"schema", 2}, {"kind", "nagata"}, {"input", json::object()}}), &err),
            kExitInputError);
  EXPECT_NE(err.find("$.schema"), std::string::npos) << err;
  fs::path junk = dir_ / "junk.json";
  std::ofstream(junk) << "{ not json";
  EXPECT_EQ(run(junk, &err), kExitInputError);
  EXPECT_EQ(run(dir_ / "missing.json", &err), kExitInputError);
}

TEST_F(Cli, FixtureNamesAreRestricted) {
  json job = {{"schema", 1}, {"kind", "toric-body"}, {"input", {{"fixture", "../toric/p2"}}}};
  std::string err;
  EXPECT_EQ(run(write_job("escape", job), &err), kExitInputError);
  EXPECT_NE(err.find("invalid fixture name"), std::string::npos) << err;
  job["input"]["fixture"] = "nonexistent";
  EXPECT_EQ(run(write_job("missing_fixture", job), &err), kExitInputError);
}

TEST_F(Cli, UnrepresentableToricInputIsAnInputError) {
  json fx = json::parse(slurp(fs::path(OKOUNKOV_TEST_FIXTURE_DIR) / "toric" / "bl2.json"));
  json job = {{"schema", 1},
              {"kind", "toric-body"},
              {"input", {{"fan", fx["fan"]}, {"divisor", fx["divisor"]}, {"flags", fx["flags"]}}}};
  std::string err;
  EXPECT_EQ(run(write_job("bl2_extended", job), &err), kExitInputError);
  EXPECT_NE(err.find("unrepresented divisor"), std::string::npos) << err;
  job["input"]["body"] = "monomial";
  ASSERT_EQ(run(write_job("bl2_monomial", job), &err), kExitOk) << err;
  Polytope p = polytope_from_json(output("bl2_monomial")["result"]["polytope"]);
  EXPECT_EQ(p, hull({{Rat(0), Rat(0), Rat(1), Rat(0)}, {Rat(1), Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(1), Rat(1)}}, 4));
}

TEST_F(Cli, OutputIsDeterministic) {
  ASSERT_EQ(run(kJobs / "bl2_surface_body.json"), kExitOk);
  std::string first = slurp(dir_ / "out" / "bl2_surface_body.json");
  ASSERT_EQ(run(kJobs / "bl2_surface_body.json"), kExitOk);
  EXPECT_EQ(slurp(dir_ / "out" / "bl2_surface_body.json"), first);
}

TEST_F(Cli, GridStepOverride) {
  RunOptions opts;
  opts.grid_step = Rat(1, 4);
  ASSERT_EQ(run(kJobs / "bl2_surface_body.json", nullptr, opts), kExitOk);
  json doc = output("bl2_surface_body");
  EXPECT_EQ(doc["result"]["grid_step"], "1/4");
  // the breakpoints of H on Bl_2 lie on the 1/4 grid too
  Polytope p = polytope_from_json(doc["result"]["polytope"]);
  EXPECT_EQ(p.vertices().size(), 6u);
}

TEST_F(Cli, FixtureDirectoryOverride) {
  fs::path alt = dir_ / "fixtures";
  fs::create_directories(alt / "toric");
  fs::copy_file(fs::path(OKOUNKOV_TEST_FIXTURE_DIR) / "toric" / "p2.json", alt / "toric" / "p2.json");
  json job = {{"schema", 1}, {"kind", "toric-body"}, {"input", {{"fixture", "p2"}}}};
  fs::path jp = write_job("p2_alt", job);

  ASSERT_EQ(setenv("OKOUNKOV_FIXTURES", alt.c_str(), 1), 0);
  EXPECT_EQ(default_fixture_dir(), alt.string());
  EXPECT_EQ(run(jp), kExitOk);
  job["input"]["fixture"] = "bl1";  // not copied
  EXPECT_EQ(run(write_job("bl1_alt", job)), kExitInputError);
  unsetenv("OKOUNKOV_FIXTURES");
  EXPECT_EQ(run(write_job("bl1_default", job)), kExitOk);

  RunOptions opts;
  opts.fixture_dir = alt.string();
  EXPECT_EQ(run(write_job("bl1_opts", job), nullptr, opts), kExitInputError);
}

TEST_F(Cli, NamedOutputFile) {
  json job = nagata_job("3");
  job["output"] = "custom.json";
  ASSERT_EQ(run(write_job("named", job)), kExitOk);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "custom.json"));
  job["output"] = "../escape.json";
  EXPECT_EQ(run(write_job("named_bad", job)), kExitInputError);
}

TEST(PolytopeJson, RoundTrip) {
  std::vector<Polytope> samples{
      hull({{Rat(0), Rat(0)}, {Rat(1, 3), Rat(0)}, {Rat(1, 3), Rat(-2, 7)}}, 2),
      hull({{Rat(1), Rat(2), Rat(3)}}, 3),
      hull({{Rat(0), Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(1), Rat(1)}}, 4),
      Polytope(3),
  };
  for (const auto& p : samples) {
    json j = to_json(p);
    Polytope back = polytope_from_json(json::parse(j.dump()));
    EXPECT_EQ(back, p);
    EXPECT_EQ(to_json(back).dump(), j.dump());
  }
  EXPECT_EQ(to_json(Rat(-6, 4) + Rat(0)), "-3/2");
  EXPECT_EQ(to_json(Rat(4)), "4");
}

TEST(PolytopeJson, RadValRoundTrip) {
  for (const auto& r : {RadVal(Rat(1, 2), Int(2)), RadVal(Rat(3)), RadVal(Rat(-5, 7), Int(10))}) {
    EXPECT_EQ(radval_from_json(to_json(r)), r);
  }
  EXPECT_THROW(radval_from_json(json{{"coeff", "1"}, {"radicand", "-2"}}), InvalidInput);
}

TEST(Svg, Triangle) {
  std::string svg = render_svg(hull({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}}, 2));
  EXPECT_NE(svg.find("<polygon"), std::string::npos);
  EXPECT_NE(svg.find("(1,1)"), std::string::npos);
  EXPECT_NE(svg.find("width=\"400\""), std::string::npos);
  // y axis points up: (1,1) is drawn above (1,0)
  EXPECT_NE(svg.find("cx=\"360.00\" cy=\"40.00\""), std::string::npos) << svg;
  EXPECT_NE(svg.find("cx=\"360.00\" cy=\"360.00\""), std::string::npos) << svg;
}

TEST(Svg, PointAndEmpty) {
  std::string pt = render_svg(hull({{Rat(1, 2), Rat(1, 2)}}, 2));
  EXPECT_EQ(pt.find("<polygon"), std::string::npos);
  EXPECT_NE(pt.find("<circle"), std::string::npos);
  EXPECT_NE(pt.find("(1/2,1/2)"), std::string::npos);
  EXPECT_NE(render_svg(Polytope(2)).find(">empty<"), std::string::npos);
  EXPECT_THROW(render_svg(hull({{Rat(0), Rat(0), Rat(0)}}, 3)), InvalidInput);
}

TEST(Binary, ExitCodes) {
  const fs::path dir = fs::temp_directory_path() / "okounkov_cli_binary";
  fs::remove_all(dir);
  const std::string bin = OKOUNKOV_CLI_BINARY;
  auto sh = [&](const std::string& args) {
    int status = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  const std::string job = (kJobs / "bl2_eps_xi.json").string();
  EXPECT_EQ(sh("run --job " + job + " --out " + dir.string()), 0);
  EXPECT_TRUE(fs::exists(dir / "bl2_eps_xi.json"));
  EXPECT_EQ(sh("run --job " + job + " --out " + dir.string() + " --grid-step 0"), 1);
  EXPECT_EQ(sh("run --job " + job + " --out " + dir.string() + " --grid-step x/y"), 1);
  EXPECT_EQ(sh("run --job " + (dir / "missing.json").string() + " --out " + dir.string()), 1);
  EXPECT_EQ(sh("run --out " + dir.string()), 1);
  EXPECT_EQ(sh(""), 1);
  EXPECT_EQ(sh("run --job " + (kJobs / "bl1_semigroup.json").string() + " --out " + dir.string() + " --m-max 2"),
            0);
  fs::remove_all(dir);
}
