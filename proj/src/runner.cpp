#include "geosho/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "experiment_registry.hpp"
#include "geosho/errors.hpp"

namespace geosho::runner {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// config

double ExperimentConfig::param(const std::string& key, double fallback) const {
  for (const auto& [k, v] : parameters)
    if (k == key) return v;
  return fallback;
}

bool ExperimentConfig::has_param(const std::string& key) const {
  for (const auto& [k, v] : parameters)
    if (k == key) return true;
  return false;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ConfigError("unknown output format '" + name + "' (expected csv or json)");
}

namespace {

// Translate a nlohmann byte offset into a 1-based line number for error
// messages ("parse error ... line N").
int line_of_offset(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

void reject_unknown_keys(const json& obj, const char* where,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) { ok = true; break; }
    if (!ok)
      throw ConfigError(std::string("unknown field '") + key + "' in " + where);
  }
}

double require_number(const json& v, const std::string& field) {
  if (!v.is_number())
    throw ConfigError("field '" + field + "' must be a number");
  return v.get<double>();
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error at line " +
                      std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
  reject_unknown_keys(doc, "config",
                      {"experiment", "parameters", "integrator", "output", "seed"});

  ExperimentConfig config;
  if (!doc.contains("experiment") || !doc["experiment"].is_string())
    throw ConfigError("config requires a string field 'experiment'");
  config.experiment = doc["experiment"].get<std::string>();

  if (doc.contains("parameters")) {
    const json& params = doc["parameters"];
    if (!params.is_object())
      throw ConfigError("field 'parameters' must be an object");
    for (const auto& [key, value] : params.items())
      config.parameters.emplace_back(key, require_number(value, "parameters." + key));
  }

  if (doc.contains("integrator")) {
    const json& integ = doc["integrator"];
    if (!integ.is_object())
      throw ConfigError("field 'integrator' must be an object");
    reject_unknown_keys(integ, "integrator", {"h", "end"});
    if (integ.contains("h")) config.step = require_number(integ["h"], "integrator.h");
    if (integ.contains("end")) config.end = require_number(integ["end"], "integrator.end");
  }

  if (doc.contains("output")) {
    const json& out = doc["output"];
    if (!out.is_object()) throw ConfigError("field 'output' must be an object");
    reject_unknown_keys(out, "output", {"path", "format"});
    if (out.contains("path")) {
      if (!out["path"].is_string())
        throw ConfigError("field 'output.path' must be a string");
      config.output_path = out["path"].get<std::string>();
    }
    if (out.contains("format")) {
      if (!out["format"].is_string())
        throw ConfigError("field 'output.format' must be a string");
      config.format = parse_format(out["format"].get<std::string>());
    }
  }

  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (!s.is_number_integer() && !s.is_number_unsigned())
      throw ConfigError("field 'seed' must be an integer");
    config.seed = s.get<std::uint64_t>();
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failure on config file '" + path + "'");
  return parse_config_text(buf.str());
}

void apply_override(ExperimentConfig& config, const std::string& key,
                    const std::string& value) {
  auto as_number = [&](const std::string& what) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != value.size() || value.empty())
      throw ConfigError("override " + what + "=" + value + " is not a number");
    return x;
  };

  if (key == "experiment") {
    config.experiment = value;
  } else if (key == "seed") {
    const double x = as_number(key);
    if (x < 0 || x != std::floor(x))
      throw ConfigError("seed override must be a non-negative integer");
    config.seed = static_cast<std::uint64_t>(x);
  } else if (key == "integrator.h") {
    config.step = as_number(key);
  } else if (key == "integrator.end") {
    config.end = as_number(key);
  } else if (key == "output.path") {
    config.output_path = value;
  } else if (key == "output.format") {
    config.format = parse_format(value);
  } else {
    const double x = as_number(key);
    for (auto& [k, v] : config.parameters)
      if (k == key) { v = x; return; }
    config.parameters.emplace_back(key, x);
  }
}

// ---------------------------------------------------------------------------
// records

ResultRecord make_record(std::string experiment,
                         std::vector<std::pair<std::string, std::string>> params,
                         std::string quantity, double measured, double reference,
                         double tolerance) {
  ResultRecord r;
  r.experiment = std::move(experiment);
  r.measured = measured;
  r.reference = reference;
  r.abs_err = std::abs(measured - reference);
  r.rel_err = reference != 0.0 ? r.abs_err / std::abs(reference) : r.abs_err;
  r.tolerance = tolerance;
  r.pass = r.abs_err <= tolerance;
  r.parameters.reserve(params.size() + 2);
  r.parameters.emplace_back("quantity", std::move(quantity));
  r.parameters.emplace_back("tolerance", format_double(tolerance));
  for (auto& p : params) r.parameters.push_back(std::move(p));
  return r;
}

bool all_pass(const std::vector<ResultRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const ResultRecord& r) { return r.pass; });
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// emission

namespace {

// CSV quoting per RFC 4180; parameter values are numeric or simple labels,
// but quote defensively anyway.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_csv(const std::vector<ResultRecord>& records) {
  std::size_t width = 0;
  for (const auto& r : records) width = std::max(width, r.parameters.size());

  std::string out = "experiment";
  for (std::size_t i = 0; i < width; ++i) out += ",param_key,param_value";
  out += ",measured,reference,abs_err,rel_err,pass,wall_ms\n";

  for (const auto& r : records) {
    out += csv_field(r.experiment);
    for (std::size_t i = 0; i < width; ++i) {
      if (i < r.parameters.size()) {
        out += ',';
        out += csv_field(r.parameters[i].first);
        out += ',';
        out += csv_field(r.parameters[i].second);
      } else {
        out += ",,";
      }
    }
    out += ',';
    out += format_double(r.measured);
    out += ',';
    out += format_double(r.reference);
    out += ',';
    out += format_double(r.abs_err);
    out += ',';
    out += format_double(r.rel_err);
    out += ',';
    out += r.pass ? '1' : '0';
    out += ',';
    out += format_double(r.wall_ms);
    out += '\n';
  }
  return out;
}

std::string render_json(const std::vector<ResultRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) {
    ordered_json obj;
    obj["experiment"] = r.experiment;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    obj["parameters"] = params;
    obj["measured"] = r.measured;
    obj["reference"] = r.reference;
    obj["abs_err"] = r.abs_err;
    obj["rel_err"] = r.rel_err;
    obj["pass"] = r.pass;
    obj["wall_ms"] = r.wall_ms;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

void emit_results(const std::vector<ResultRecord>& records, OutputFormat format,
                  const std::string& path) {
  const std::string payload =
      format == OutputFormat::csv ? render_csv(records) : render_json(records);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  out.flush();
  if (!out) throw IoError("write failure on output file '" + path + "'");
}

// ---------------------------------------------------------------------------
// dispatch

const std::vector<ExperimentInfo>& list_experiments() {
  static const std::vector<ExperimentInfo> infos = [] {
    std::vector<ExperimentInfo> out;
    for (const auto& e : experiment_registry())
      out.push_back({e.name, e.description});
    return out;
  }();
  return infos;
}

std::vector<ResultRecord> run_experiment(const ExperimentConfig& config) {
  const ExperimentEntry* entry = nullptr;
  for (const auto& e : experiment_registry())
    if (config.experiment == e.name) { entry = &e; break; }
  if (!entry) {
    std::string names;
    for (const auto& e : experiment_registry()) {
      if (!names.empty()) names += ", ";
      names += e.name;
    }
    throw ConfigError("unknown experiment '" + config.experiment + "' (expected one of " +
                      names + ")");
  }

  for (const auto& [key, value] : config.parameters) {
    if (std::find(entry->allowed_params.begin(), entry->allowed_params.end(), key) ==
        entry->allowed_params.end()) {
      std::string names;
      for (const auto& a : entry->allowed_params) {
        if (!names.empty()) names += ", ";
        names += a;
      }
      throw ConfigError("experiment '" + config.experiment + "' does not take parameter '" +
                        key + "'" + (names.empty() ? "" : " (allowed: " + names + ")"));
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<ResultRecord> records = entry->run(config);
  const auto t1 = std::chrono::steady_clock::now();
  if (config.timings) {
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    for (auto& r : records) r.wall_ms = ms;
  }

  if (config.output_path)
    emit_results(records, config.format, *config.output_path);
  return records;
}

std::vector<ResultRecord> run_selftest(std::uint64_t seed, bool timings) {
  std::vector<ResultRecord> all;
  for (const auto& e : experiment_registry()) {
    ExperimentConfig config;
    config.experiment = e.name;
    config.seed = seed;
    config.timings = timings;
    std::vector<ResultRecord> records = run_experiment(config);
    all.insert(all.end(), std::make_move_iterator(records.begin()),
               std::make_move_iterator(records.end()));
  }
  return all;
}

}  // namespace geosho::runner
