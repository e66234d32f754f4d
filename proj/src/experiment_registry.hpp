#pragma once
// Internal glue between the dispatcher (runner.cpp) and the experiment
// catalogue (experiments.cpp).  Not installed.

#include <string>
#include <vector>

#include "geosho/runner.hpp"

namespace geosho::runner {

struct ExperimentEntry {
  const char* name;
  const char* description;
  std::vector<std::string> allowed_params;
  std::vector<ResultRecord> (*run)(const ExperimentConfig&);
};

const std::vector<ExperimentEntry>& experiment_registry();

}  // namespace geosho::runner
