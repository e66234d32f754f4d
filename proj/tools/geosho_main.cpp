// geosho command-line harness: run configured experiments, list the
// catalogue, or execute the full self-test suite.
//
// Exit codes: 0 all records pass, 1 at least one tolerance failure,
// 2 configuration/usage error, 3 I/O error.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geosho/errors.hpp"
#include "geosho/runner.hpp"

namespace {

using geosho::runner::ResultRecord;

void print_records(const std::vector<ResultRecord>& records) {
  int failures = 0;
  for (const auto& r : records) {
    if (!r.pass) ++failures;
    std::string quantity = "?";
    for (const auto& [k, v] : r.parameters)
      if (k == "quantity") { quantity = v; break; }
    std::printf("[%s] %s/%s measured=%s reference=%s abs_err=%s tol=%s\n",
                r.pass ? "PASS" : "FAIL", r.experiment.c_str(), quantity.c_str(),
                geosho::runner::format_double(r.measured).c_str(),
                geosho::runner::format_double(r.reference).c_str(),
                geosho::runner::format_double(r.abs_err).c_str(),
                geosho::runner::format_double(r.tolerance).c_str());
  }
  std::printf("%zu records, %d failure%s\n", records.size(), failures,
              failures == 1 ? "" : "s");
}

int finish(const std::vector<ResultRecord>& records) {
  print_records(records);
  return geosho::runner::all_pass(records) ? geosho::runner::kExitAllPass
                                           : geosho::runner::kExitToleranceFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic-oscillator geodesics across quantum, information,"
               " gravitational and thermal models: verification harness"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "Run one experiment from a JSON config");
  std::string config_path;
  run->add_option("config", config_path, "JSON config file")->required();
  std::string out_path, format_name;
  run->add_option("--out", out_path, "Output file (overrides config output.path)");
  run->add_option("--format", format_name, "csv or json (overrides config output.format)");
  long long seed_flag = -1;
  run->add_option("--seed", seed_flag, "Seed override for randomized sweeps");
  std::vector<std::string> sets;
  run->add_option("--set", sets,
                  "key=value override (experiment parameters, seed, integrator.h, "
                  "integrator.end, output.path, output.format)");
  bool timings = false;
  run->add_flag("--timings", timings,
                "Record real wall times (sacrifices byte-identical output)");

  // list
  auto* list = app.add_subcommand("list", "List available experiments");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "Run the full verification suite");
  long long st_seed = 0;
  selftest->add_option("--seed", st_seed, "Seed for randomized sweeps");
  std::string st_out, st_format = "csv";
  selftest->add_option("--out", st_out, "Write all records to this file");
  selftest->add_option("--format", st_format, "csv or json");
  bool st_timings = false;
  selftest->add_flag("--timings", st_timings,
                     "Record real wall times (sacrifices byte-identical output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return geosho::runner::kExitConfigError;
  }

  try {
    if (list->parsed()) {
      for (const auto& info : geosho::runner::list_experiments())
        std::printf("%-18s %s\n", info.name.c_str(), info.description.c_str());
      return geosho::runner::kExitAllPass;
    }

    if (run->parsed()) {
      geosho::runner::ExperimentConfig config = geosho::runner::load_config(config_path);
      for (const std::string& kv : sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
          throw geosho::ConfigError("--set expects key=value, got '" + kv + "'");
        geosho::runner::apply_override(config, kv.substr(0, eq), kv.substr(eq + 1));
      }
      if (seed_flag >= 0) config.seed = static_cast<std::uint64_t>(seed_flag);
      if (!out_path.empty()) config.output_path = out_path;
      if (!format_name.empty()) config.format = geosho::runner::parse_format(format_name);
      config.timings = timings;
      return finish(geosho::runner::run_experiment(config));
    }

    // selftest
    std::vector<ResultRecord> records =
        geosho::runner::run_selftest(static_cast<std::uint64_t>(st_seed), st_timings);
    if (!st_out.empty())
      geosho::runner::emit_results(records, geosho::runner::parse_format(st_format), st_out);
    return finish(records);
  } catch (const geosho::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return geosho::runner::kExitIoError;
  } catch (const geosho::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return geosho::runner::kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return geosho::runner::kExitConfigError;
  }
}
