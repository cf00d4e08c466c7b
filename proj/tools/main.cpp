#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"okounkov: exact extended Okounkov bodies and local positivity invariants"};
  app.require_subcommand(1);

  okounkov::tools::RunOptions opts;
  std::string job_path;
  std::string grid_step;
  long m_max = 0;

  auto* run = app.add_subcommand("run", "Evaluate one job file");
  run->add_option("--job", job_path, "Job description (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", opts.out_dir, "Output directory")->required();
  run->add_flag("--render", opts.render, "Write an SVG next to 2-D results");
  run->add_option("--grid-step", grid_step, "Grid step p/q for surface bodies");
  run->add_option("--m-max", m_max, "Largest multiple for the semigroup sampler")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : okounkov::tools::kExitInputError;
  }

  if (!grid_step.empty()) {
    try {
      opts.grid_step = okounkov::parse_rat(grid_step);
    } catch (const okounkov::Error& e) {
      std::cerr << "error: --grid-step: " << e.what() << "\n";
      return okounkov::tools::kExitInputError;
    }
    if (*opts.grid_step <= 0) {
      std::cerr << "error: --grid-step must be positive\n";
      return okounkov::tools::kExitInputError;
    }
  }
  if (m_max > 0) opts.m_max = m_max;
  return okounkov::tools::run_job_file(job_path, opts, std::cerr);
}
