#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "gradua_cli/runner.hpp"

namespace gradua::cli {
namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(GRADUA_SOURCE_DIR) + "/sessions/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<TaskReport> run_text(std::string_view text, RunOptions opts = {}) {
  Session s = parse_session(text);
  return run_session(s, elaborate(s, opts.field), opts);
}

const TaskReport& find(const std::vector<TaskReport>& rs, const std::string& kind, int nth = 0) {
  for (const auto& r : rs) {
    if (r.task == kind && nth-- == 0) return r;
  }
  throw std::runtime_error("no task " + kind);
}

TEST(RunSession, DeclarationsOnlyGiveNoReports) {
  EXPECT_TRUE(run_text("ring R = graded([x, y])\nideal I = (x)\n").empty());
}

TEST(RunSession, CrossRingVFunction) {
  auto rs = run_text(read("cross_ring.gva"));
  const TaskReport& r = find(rs, "vfunction");
  ASSERT_EQ(r.status, TaskStatus::kOk);
  EXPECT_EQ(r.result["fit"]["a"], 1);
  EXPECT_EQ(r.result["fit"]["b"], -2);
  EXPECT_EQ(r.result["rows"].size(), 7u);
  EXPECT_EQ(exit_code(rs), 0);
}

TEST(RunSession, TorsionVNumberRows) {
  auto rs = run_text(read("torsion.gva"));
  const TaskReport& r = find(rs, "vfunction");
  ASSERT_EQ(r.status, TaskStatus::kOk);
  for (const auto& row : r.result["rows"]) {
    int n = row["n"];
    EXPECT_EQ(row["v"], 3);
    EXPECT_EQ(row["v_p"][0]["prime"], "(x)");
    EXPECT_EQ(row["v_p"][0]["v"], 3);
    EXPECT_EQ(row["v_p"][1]["prime"], "(x, y)");
    EXPECT_EQ(row["v_p"][1]["v"], 2 * n + 1);
  }
  const TaskReport& v = find(rs, "verify");
  EXPECT_EQ(v.result["verdict"]["hypothesis"], "fail");
}

TEST(RunSession, FailuresAreIsolated) {
  auto rs = run_text(
      "ring R = graded([x, y])\nmodule M = ideal((x))\nmodule N = free([0])\nideal I = (y)\n"
      "task vfunction { functor=raw, M=M, N=N, I=I, n_range=1..4 }\n"
      "task vnumber { module=M }\n");
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0].status, TaskStatus::kError);
  EXPECT_NE(rs[0].error.find("not contained"), std::string::npos);
  EXPECT_TRUE(rs[0].result.is_null());
  EXPECT_EQ(rs[1].status, TaskStatus::kOk);
  EXPECT_EQ(exit_code(rs), 1);
}

TEST(RunSession, NoStableLawIsAWarning) {
  auto rs = run_text(
      "ring R = graded([x, y])\nmodule M = free([0])\nideal I = (y)\n"
      "task vfunction { functor=raw, M=M, N=M, I=I, n_range=1..3 }\n");
  ASSERT_EQ(rs[0].status, TaskStatus::kOk);
  EXPECT_TRUE(rs[0].result["fit"].is_null());
  ASSERT_EQ(rs[0].warnings.size(), 1u);
  EXPECT_NE(rs[0].warnings[0].find("no stable linear law"), std::string::npos);
}

TEST(RunSession, IncompleteAssIsWarned) {
  auto rs = run_text("ring R = graded([x, y])\nmodule M = cyclic((x^2 - y^2))\ntask ass { module=M }\n");
  EXPECT_FALSE(rs[0].result["complete"]);
  EXPECT_FALSE(rs[0].warnings.empty());
}

TEST(RunSession, GbAndResolveResults) {
  auto rs = run_text(read("cross_ring.gva"));
  const TaskReport& gb = find(rs, "gb");
  EXPECT_TRUE(gb.result["buchberger"]);
  EXPECT_EQ(gb.result["size"], 3);
  const TaskReport& res = find(rs, "resolve");
  EXPECT_TRUE(res.result["d_squared_zero"]);
  EXPECT_FALSE(res.result["complete"]);
  EXPECT_FALSE(res.warnings.empty());
}

TEST(RunSession, FieldOverrideReachesTheReport) {
  RunOptions opts;
  opts.field = Field::prime(101);
  opts.timing = false;
  Session s = parse_session(read("torsion.gva"));
  auto rs = run_session(s, elaborate(s, opts.field), opts);
  Json j = report_json(s, rs, opts);
  EXPECT_EQ(j["config"]["field"], "Fp:101");
  EXPECT_FALSE(j["tasks"][0].contains("timing_ms"));
  EXPECT_EQ(find(rs, "vnumber").result["v"], 3);
}

TEST(Report, DeterministicWithoutTiming) {
  RunOptions opts;
  opts.timing = false;
  Session s = parse_session(read("cross_ideal.gva"));
  Environment env = elaborate(s);
  std::string a = report_json(s, run_session(s, env, opts), opts).dump(2);
  opts.jobs = 3;
  std::string b = report_json(s, run_session(s, env, opts), opts).dump(2);
  EXPECT_EQ(a, b);
}

TEST(Report, TsvHasOneBlockPerSweep) {
  auto rs = run_text(read("torsion.gva"));
  std::string tsv = tsv_text(rs);
  EXPECT_NE(tsv.find("n\tv\tindeg\tass\n1\t3\t0\t(x) (x, y)\n"), std::string::npos);
  std::size_t blocks = 0;
  for (std::size_t p = tsv.find("# task"); p != std::string::npos; p = tsv.find("# task", p + 1)) ++blocks;
  EXPECT_EQ(blocks, 2u);
}

}  // namespace
}  // namespace gradua::cli
