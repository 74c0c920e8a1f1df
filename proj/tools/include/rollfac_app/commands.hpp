#pragma once
#include <optional>
#include <string>

#include "rollfac_app/checks.hpp"

namespace rf::app {

struct Options {
  std::string scheme = "canonical";  // canonical, balanced or a JSON file with per-equation overrides
  std::optional<uint32_t> prime;
};

// Human-readable rendering of a report; variable names are replaced by their aliases.
std::string render_text(const json& rep);

// Each command maps an input document to a JSON report.
json cmd_roll(const json& in, const Options& opt);
json cmd_lift(const json& in, const Options& opt);
json cmd_t1(const json& in, const Options& opt);
json cmd_obstruct(const json& in, const Options& opt);
json cmd_hyperell(const json& in, const Options& opt);
json cmd_classify(const json& in, const Options& opt);
json cmd_gb(const json& in, const Options& opt);

// Replays fixtures (all, or the given anchor); report["passed"] is the overall verdict.
json run_fixtures(const CheckContext& c, const std::string& anchor = "");
json run_criteria(const CheckContext& c, int only = 0);

enum ExitCode { kOk = 0, kPrecondition = 1, kFixtureFailure = 2, kParseError = 3 };

int run_cli(int argc, char** argv);

}  // namespace rf::app
