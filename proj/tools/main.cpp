#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gradua/reference.hpp"
#include "gradua_cli/runner.hpp"

namespace {

constexpr int kParseError = 2;

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int run_command(const std::string& path, const gradua::cli::RunOptions& opts, const std::string& out_path,
                const std::string& tsv_path) {
  using namespace gradua::cli;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "gradua: cannot open " << path << "\n";
    return kParseError;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  Session session;
  Environment env;
  try {
    session = parse_session(buf.str());
    env = elaborate(session, opts.field);
  } catch (const SessionError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": error: " << e.what() << "\n";
    return kParseError;
  }

  auto reports = run_session(session, env, opts);
  std::string json = report_json(session, reports, opts).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << json;
  } else if (!write_file(out_path, json)) {
    std::cerr << "gradua: cannot write " << out_path << "\n";
    return 1;
  }
  if (!tsv_path.empty() && !write_file(tsv_path, tsv_text(reports))) {
    std::cerr << "gradua: cannot write " << tsv_path << "\n";
    return 1;
  }
  for (const auto& r : reports) {
    if (r.status == TaskStatus::kOk) continue;
    std::cerr << path << ":" << r.line << ": task " << r.task << " " << to_string(r.status);
    if (!r.error.empty()) std::cerr << ": " << r.error;
    std::cerr << "\n";
  }
  return exit_code(reports);
}

int verify_command(int jobs) {
  auto checks = gradua::reference_checks(jobs);
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.suite.size() + c.name.size() + 1);
  int failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width) + 2)
              << (c.suite + "/" + c.name) << c.detail << "\n";
    failed += !c.pass;
  }
  std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gradua: graded Ext/Tor, associated primes and v-numbers"};
  app.require_subcommand(1);

  std::string session_path;
  std::string field_text;
  std::string out_path;
  std::string tsv_path;
  int jobs = 0;
  bool no_timing = false;
  auto* run = app.add_subcommand("run", "Run a session file and print a JSON report");
  run->add_option("session", session_path, "Session file (.gva)")->required();
  run->add_option("--jobs", jobs, "Worker threads for per-n sweeps")->check(CLI::PositiveNumber);
  run->add_option("--field", field_text, "Override the coefficient field: Q or Fp:p");
  run->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  run->add_option("--tsv", tsv_path, "Write vfunction rows as TSV");
  run->add_flag("--no-timing", no_timing, "Omit timings (byte-stable output)");

  int verify_jobs = 1;
  auto* verify = app.add_subcommand("verify-paper", "Run the built-in reference suite and print a pass/fail table");
  verify->add_option("--jobs", verify_jobs, "Worker threads for per-n sweeps")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kParseError;
  }

  if (*verify) return verify_command(verify_jobs);

  gradua::cli::RunOptions opts;
  opts.timing = !no_timing;
  if (jobs > 0) opts.jobs = jobs;
  if (!field_text.empty()) {
    try {
      opts.field = gradua::Field::parse(field_text);
    } catch (const std::exception& e) {
      std::cerr << "gradua: " << e.what() << "\n";
      return kParseError;
    }
  }
  return run_command(session_path, opts, out_path, tsv_path);
}
