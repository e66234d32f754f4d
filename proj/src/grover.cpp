#include "geosho/grover.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace geosho::grover {

GroverProblem::GroverProblem(long n_items, long target_one_based)
    : n(n_items), target(target_one_based) {
  if (n < 2) throw ContractError("GroverProblem: need n >= 2");
  if (target < 1 || target > n)
    throw ContractError("GroverProblem: target index " + std::to_string(target) +
                        " outside 1.." + std::to_string(n));
  phi = 2.0 * std::asin(1.0 / std::sqrt(static_cast<double>(n)));
}

PlaneState grover_state(const GroverProblem& problem, long iterations) {
  if (iterations < 0) throw ContractError("grover_state: iterations must be >= 0");
  const double angle = (static_cast<double>(iterations) + 0.5) * problem.phi;
  return {std::sin(angle), std::cos(angle)};
}

hilbert::StateVector grover_state_matrix(const GroverProblem& problem, long iterations) {
  if (iterations < 0) throw ContractError("grover_state_matrix: iterations must be >= 0");
  if (problem.n > kMatrixSimulationCap)
    throw ResourceLimitError("grover_state_matrix: n = " + std::to_string(problem.n) +
                             " exceeds the simulation cap " +
                             std::to_string(kMatrixSimulationCap));

  const std::size_t n = static_cast<std::size_t>(problem.n);
  const std::size_t w = static_cast<std::size_t>(problem.target - 1);
  rvec amp(n, 1.0 / std::sqrt(static_cast<double>(problem.n)));

  for (long k = 0; k < iterations; ++k) {
    amp[w] = -amp[w];                      // oracle: sign flip on the marked item
    const double mean = kahan_sum(amp) / static_cast<double>(problem.n);
    for (double& a : amp) a = 2.0 * mean - a;  // diffusion: reflect about |s>
  }

  cvec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = amp[i];
  return hilbert::StateVector::normalized(std::move(out));
}

OptimalIterations optimal_iterations(const GroverProblem& problem) {
  OptimalIterations out;
  // (k + 1/2) phi = pi/2 has the real solution pi/(2 phi) - 1/2 >= 0.
  out.k_exact = std::llround(pi / (2.0 * problem.phi) - 0.5);
  if (out.k_exact < 0) out.k_exact = 0;
  out.k_asymptotic = pi / 4.0 * std::sqrt(static_cast<double>(problem.n));
  const double amp = grover_state(problem, out.k_exact).target_amplitude;
  out.success_probability = amp * amp;
  return out;
}

ProbabilityPath ProbabilityPath::from_amplitudes(int dim, Closure amplitudes,
                                                 Closure amplitude_rates) {
  if (dim < 2) throw ContractError("ProbabilityPath: dimension must be >= 2");
  if (!amplitudes) throw ContractError("ProbabilityPath: amplitude closure required");
  return ProbabilityPath(dim, std::move(amplitudes), std::move(amplitude_rates));
}

ProbabilityPath ProbabilityPath::from_probabilities(int dim, Closure probabilities) {
  if (dim < 2) throw ContractError("ProbabilityPath: dimension must be >= 2");
  if (!probabilities) throw ContractError("ProbabilityPath: probability closure required");
  auto q = [p = std::move(probabilities)](double theta) {
    rvec values = p(theta);
    for (std::size_t m = 0; m < values.size(); ++m) {
      if (values[m] < 0.0)
        throw InvalidPathError("ProbabilityPath: p_" + std::to_string(m + 1) + " = " +
                               std::to_string(values[m]) + " < 0 at theta = " +
                               std::to_string(theta));
      values[m] = std::sqrt(values[m]);
    }
    return values;
  };
  return ProbabilityPath(dim, std::move(q), nullptr);
}

rvec ProbabilityPath::amplitudes(double theta) const {
  rvec q = q_(theta);
  if (static_cast<int>(q.size()) != dim_)
    throw ContractError("ProbabilityPath: closure returned wrong dimension");
  double total = 0.0;
  for (double v : q) total += v * v;
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidPathError("ProbabilityPath: sum p_m = " + std::to_string(total) +
                           " != 1 at theta = " + std::to_string(theta));
  return q;
}

rvec ProbabilityPath::probabilities(double theta) const {
  rvec q = amplitudes(theta);
  for (double& v : q) v *= v;
  return q;
}

rvec ProbabilityPath::amplitude_rates(double theta) const {
  if (!rates_)
    throw ContractError("ProbabilityPath: no analytic amplitude rates attached");
  rvec qdot = rates_(theta);
  if (static_cast<int>(qdot.size()) != dim_)
    throw ContractError("ProbabilityPath: rate closure returned wrong dimension");
  return qdot;
}

ProbabilityPath groverian_path(long n) {
  if (n < 2) throw ContractError("groverian_path: need n >= 2");
  const std::size_t dim = static_cast<std::size_t>(n);
  const double root = std::sqrt(static_cast<double>(n - 1));
  auto q = [dim, root](double theta) {
    rvec out(dim, std::cos(theta) / root);
    out[0] = std::sin(theta);
    return out;
  };
  auto qdot = [dim, root](double theta) {
    rvec out(dim, -std::sin(theta) / root);
    out[0] = std::cos(theta);
    return out;
  };
  return ProbabilityPath::from_amplitudes(static_cast<int>(dim), q, qdot);
}

double fisher_information(const ProbabilityPath& path, double theta, FisherMode mode) {
  rvec qdot;
  if (mode == FisherMode::analytic) {
    qdot = path.amplitude_rates(theta);
  } else {
    const rvec plus = path.amplitudes(theta + kFisherFdStep);
    const rvec minus = path.amplitudes(theta - kFisherFdStep);
    qdot.resize(plus.size());
    for (std::size_t m = 0; m < plus.size(); ++m)
      qdot[m] = central_first(minus[m], plus[m], kFisherFdStep);
  }
  double f = 0.0;
  for (double v : qdot) f += v * v;
  return 4.0 * f;
}

}  // namespace geosho::grover
