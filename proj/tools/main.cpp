#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rca/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Exact calculator for reflection-group operator algebras: affinity "
      "decisions, connection flatness, relation verification, basis ranks, "
      "and parameter pullbacks over structured JSON jobs."};

  std::string input = "-";
  std::string output = "-";
  long seed = 0, max_degree = 0, order_cap = 0;
  app.add_option("--input", input, "job file, - for stdin")->capture_default_str();
  app.add_option("--output", output, "report file, - for stdout")
      ->capture_default_str();
  auto* seed_opt = app.add_option("--seed", seed, "override options.seed");
  auto* deg_opt =
      app.add_option("--max-degree", max_degree, "override options.max_degree");
  auto* cap_opt =
      app.add_option("--order-cap", order_cap, "override options.order_cap");
  auto* strict_flag =
      app.add_flag("--strict", "require class-constant parameters");
  auto* no_strict_flag =
      app.add_flag("--no-strict", "allow per-reflection parameters");
  auto* timing_flag =
      app.add_flag("--timing", "report wall time instead of a fixed 0");

  CLI11_PARSE(app, argc, argv);

  if (strict_flag->count() && no_strict_flag->count()) {
    std::cerr << "input error: --strict and --no-strict conflict\n";
    return 2;
  }

  std::string text;
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in.good()) {
      std::cerr << "input error: cannot read " << input << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  rca::CliOptions opts;
  if (seed_opt->count()) opts.seed = seed;
  if (deg_opt->count()) opts.max_degree = max_degree;
  if (cap_opt->count()) opts.order_cap = order_cap;
  if (strict_flag->count()) opts.strict = true;
  if (no_strict_flag->count()) opts.strict = false;
  opts.timing = timing_flag->count() > 0;

  rca::RunResult res = rca::run_job_text(text, opts);
  if (res.exit_code != 0) {
    std::cerr << res.text;
    return res.exit_code;
  }
  if (output == "-") {
    std::cout << res.text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out.good()) {
      std::cerr << "input error: cannot write " << output << "\n";
      return 2;
    }
    out << res.text;
  }
  return 0;
}
