// Job dispatch for the okounkov command line tool.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "okounkov/json_io.hpp"

namespace okounkov::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;

struct RunOptions {
  std::string out_dir = ".";
  bool render = false;
  std::optional<Rat> grid_step;  // surface bodies only
  std::optional<long> m_max;     // sampler only
  std::string fixture_dir;       // empty: default_fixture_dir()
};

/// $OKOUNKOV_FIXTURES when set, else the directory recorded at build time.
std::string default_fixture_dir();

struct JobResult {
  json document;                    // written to the output file
  bool checks_pass = true;
  std::optional<Polytope> figure;   // drawn when rendering is requested
};

/// Validates and evaluates one job document; throws okounkov::Error subclasses on bad input.
JobResult evaluate_job(const json& job, const RunOptions& opts);

/// Reads the job file, evaluates it and writes <out>/<name>.json (and .svg); returns the exit code.
int run_job_file(const std::string& job_path, const RunOptions& opts, std::ostream& err);

}  // namespace okounkov::tools
