#pragma once
// Configuration-driven experiment harness.
//
// A run is described by a small JSON document (strictly parsed: unknown
// keys reject the whole config) naming one experiment and its parameters.
// Each experiment produces ResultRecords; every record pairs one measured
// value with a reference value and an absolute tolerance, so the emitted
// CSV/JSON is self-describing and the pass column is recomputable from the
// row itself.
//
// Determinism contract: identical config + seed produce byte-identical
// output bytes.  Real wall times are therefore NOT written by default
// (wall_ms = 0); opting in via ExperimentConfig::timings stamps each
// record with the wall time of the producing experiment run, trading away
// reproducibility of that one column.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geosho::runner {

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& name);  // "csv" | "json", ConfigError otherwise

struct ExperimentConfig {
  std::string experiment;  // one of list_experiments()
  // Numeric parameters, declaration order preserved for the echo.
  std::vector<std::pair<std::string, double>> parameters;
  // Integrator settings (JSON object "integrator": {"h": ..., "end": ...}).
  std::optional<double> step;
  std::optional<double> end;
  // Output declaration ("output": {"path": ..., "format": ...}); the file is
  // written by run_experiment itself when a path is present.
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::csv;
  std::uint64_t seed = 0;
  bool timings = false;  // CLI-only switch, never read from JSON

  // Parameter lookup with a default; the experiment's allowed-key list is
  // enforced separately (see validate_parameters in runner.cpp).
  double param(const std::string& key, double fallback) const;
  bool has_param(const std::string& key) const;
};

// Strict parse of a JSON config document.  Throws ConfigError carrying the
// offending line/field; never fills defaults for misspelled keys.
ExperimentConfig parse_config_text(const std::string& text);

// Reads the file and delegates to parse_config_text.  Throws IoError if the
// file cannot be read.
ExperimentConfig load_config(const std::string& path);

// Apply one `--set key=value` override.  Recognized keys: "experiment",
// "seed", "integrator.h", "integrator.end", "output.path", "output.format";
// anything else is treated as a numeric experiment parameter.
void apply_override(ExperimentConfig& config, const std::string& key,
                    const std::string& value);

struct ResultRecord {
  std::string experiment;
  // Parameter echo in declaration order.  The first two pairs are always
  // ("quantity", <name>) and ("tolerance", <absolute tolerance>) so that a
  // row is interpretable standing alone.
  std::vector<std::pair<std::string, std::string>> parameters;
  double measured = 0.0;
  double reference = 0.0;
  double abs_err = 0.0;   // |measured - reference|
  double rel_err = 0.0;   // abs_err / |reference|, or abs_err when reference = 0
  bool pass = false;      // abs_err <= tolerance
  double tolerance = 0.0; // absolute
  double wall_ms = 0.0;   // 0 unless timings were requested
};

// Assemble a record: computes abs/rel error and the pass flag, and prepends
// the quantity/tolerance echo pairs.  `tolerance` is absolute; convert
// relative specifications at the call site.
ResultRecord make_record(std::string experiment,
                         std::vector<std::pair<std::string, std::string>> params,
                         std::string quantity, double measured, double reference,
                         double tolerance);

struct ExperimentInfo {
  std::string name;
  std::string description;
};

const std::vector<ExperimentInfo>& list_experiments();

// Dispatch on config.experiment, run it, stamp wall times if requested, and
// write config.output_path (when set) in config.format.  Throws ConfigError
// for unknown experiments or parameters.
std::vector<ResultRecord> run_experiment(const ExperimentConfig& config);

// Every experiment with its default parameters, in declaration order; the
// seed feeds the randomized sweeps.  This is the acceptance suite.
std::vector<ResultRecord> run_selftest(std::uint64_t seed, bool timings = false);

bool all_pass(const std::vector<ResultRecord>& records);

// 17-significant-digit decimal, dot separator, locale-independent.
std::string format_double(double x);

// CSV columns: experiment,param_key,param_value,...,measured,reference,
// abs_err,rel_err,pass,wall_ms.  The param pair block is padded to the
// widest record in the batch; pass is 1/0; LF line endings.
std::string render_csv(const std::vector<ResultRecord>& records);

// The same records as a JSON array of objects (lossless doubles).
std::string render_json(const std::vector<ResultRecord>& records);

// Serialize and write; parent directory must exist.  Throws IoError.
void emit_results(const std::vector<ResultRecord>& records, OutputFormat format,
                  const std::string& path);

// Process exit codes shared by the CLI and the acceptance harness.
inline constexpr int kExitAllPass = 0;
inline constexpr int kExitToleranceFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

}  // namespace geosho::runner
