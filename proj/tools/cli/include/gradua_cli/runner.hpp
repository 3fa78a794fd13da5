#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradua_cli/session.hpp"

namespace gradua::cli {

using Json = nlohmann::ordered_json;

struct RunOptions {
  std::optional<Field> field;
  // Overrides the session's `jobs` setting when set.
  std::optional<int> jobs;
  bool timing = true;
};

enum class TaskStatus { kOk, kFailed, kError };
std::string to_string(TaskStatus s);

struct TaskReport {
  std::string task;
  std::size_t index = 0;
  int line = 0;
  Json args = Json::object();
  TaskStatus status = TaskStatus::kOk;
  std::string error;
  Json result;
  std::vector<std::string> warnings;
  std::optional<double> timing_ms;
  // n, v, indeg, ass per row for vfunction and verify tasks.
  std::vector<std::vector<std::string>> tsv_rows;
};

// Runs the tasks in order. A task that throws is reported with status
// kError and does not stop later tasks.
std::vector<TaskReport> run_session(const Session& s, const Environment& env, const RunOptions& opts = {});

Json task_json(const TaskReport& r, bool timing);
Json report_json(const Session& s, const std::vector<TaskReport>& reports, const RunOptions& opts);
std::string tsv_text(const std::vector<TaskReport>& reports);

// 0 when every task is ok, 1 otherwise.
int exit_code(const std::vector<TaskReport>& reports);

}  // namespace gradua::cli
