#pragma once

// Command implementations behind the surfenum executable. Each command writes
// its report to `out`, diagnostics to `err`, and returns a process exit code.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "surfenum/enumerate.hpp"

namespace surfenum {

namespace exit_code {
inline constexpr int kSuccess = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kInputFailure = 2;
inline constexpr int kGuardAbort = 3;
}  // namespace exit_code

enum class Command { Validate, Enumerate, Bounds, Report };
enum class OutputFormat { Json, Csv, Text };
enum class FamilyFilter { All, Pppp, Psps };

struct RunConfig {
  Command command = Command::Validate;
  std::vector<std::string> inputs;  // files (validate/enumerate/bounds) or a directory (report)
  std::string inline_pd;            // used instead of inputs when non-empty
  int genus = 2;
  std::optional<long long> n;  // bounds only; otherwise taken from the input
  OutputFormat format = OutputFormat::Json;
  unsigned long long guard_cap = kDefaultGuardCap;
  int jobs = 1;  // 0 = all hardware threads
  FamilyFilter family = FamilyFilter::All;
  bool general = false;  // force the budgeted enumerator at genus 2
  std::string render_path;
};

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace surfenum
