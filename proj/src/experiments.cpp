// The experiment catalogue behind the CLI: each function turns a validated
// ExperimentConfig into ResultRecords whose measured/reference pairs carry
// the checks described in the README.  Everything here is deterministic
// given (config, seed).

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "experiment_registry.hpp"
#include "geosho/errors.hpp"
#include "geosho/fisher.hpp"
#include "geosho/grover.hpp"
#include "geosho/hilbert.hpp"
#include "geosho/models.hpp"
#include "geosho/numerics.hpp"
#include "geosho/runner.hpp"

namespace geosho::runner {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::pair<std::string, std::string> pp(const std::string& key, double value) {
  return {key, format_double(value)};
}

std::pair<std::string, std::string> pp(const std::string& key, const std::string& value) {
  return {key, value};
}

long long_param(const ExperimentConfig& config, const std::string& key, long fallback,
                long lo, long hi) {
  const double raw = config.param(key, static_cast<double>(fallback));
  if (raw != std::floor(raw))
    throw ConfigError("parameter '" + key + "' must be an integer");
  if (raw < static_cast<double>(lo) || raw > static_cast<double>(hi))
    throw ConfigError("parameter '" + key + "' out of range [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
  return static_cast<long>(raw);
}

rvec linspace(double a, double b, int n) {
  rvec xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / (n - 1);
  return xs;
}

// ---------------------------------------------------------------------------
// shared physics helpers

// Two-level generator of the Groverian rotation: H = hbar * sigma_y in the
// (target, residual) plane, so the Schrodinger flow advances theta at unit
// rate and dE = hbar exactly.
hilbert::Hamiltonian groverian_generator(double hbar) {
  ComplexMatrix h(2);
  h(0, 1) = cdouble(0.0, -hbar);
  h(1, 0) = cdouble(0.0, hbar);
  return hilbert::Hamiltonian(h, hbar);
}

hilbert::StateVector plane_state(double theta) {
  return hilbert::StateVector(cvec{std::sin(theta), std::cos(theta)});
}

// Angular frequency from a quarter-period trajectory that stopped at the
// turning threshold.  The integration halts at E - V < threshold, slightly
// short of the true turning time; the remainder is the ballistic stopping
// time |qdot|/|a| = sqrt(2 m T)/|grad V| evaluated at the last sample
// (exact for linear deceleration, and the residual phase is ~3e-5 rad, so
// the quadratic correction is negligible at the 1e-6 level).
double quarter_period_frequency(const models::JacobiSystem& system,
                                const models::TimedTrajectory& trajectory) {
  if (trajectory.end != models::TimedTrajectory::End::turning_point)
    throw InternalError("quarter_period_frequency: trajectory did not reach a turning point (" +
                        trajectory.diagnostic + ")");
  const rvec& q_last = trajectory.q.back();
  const double t_last = trajectory.t.back();
  const double kinetic = system.energy - system.potential(q_last);
  const rvec grad = system.gradient(q_last);
  double grad_norm = 0.0;
  for (double g : grad) grad_norm += g * g;
  grad_norm = std::sqrt(grad_norm);
  if (grad_norm <= 0.0)
    throw InternalError("quarter_period_frequency: vanishing force at the turning point");
  const double remainder = std::sqrt(std::max(2.0 * system.mass * kinetic, 0.0)) / grad_norm;
  return pi / (2.0 * (t_last + remainder));
}

// ---------------------------------------------------------------------------
// grover

std::vector<ResultRecord> run_grover(const ExperimentConfig& config) {
  const long n = long_param(config, "N", 64, 2, 1L << 40);
  const grover::GroverProblem problem(n, 1);
  const grover::OptimalIterations opt = grover::optimal_iterations(problem);
  const double sqrt_n = std::sqrt(static_cast<double>(n));

  std::vector<ResultRecord> records;
  const Params base{pp("N", static_cast<double>(n))};

  // k_exact against the asymptotic count (pi/4) sqrt(N); relative gap 2/sqrt(N).
  records.push_back(make_record("grover", base, "k_exact",
                                static_cast<double>(opt.k_exact), opt.k_asymptotic,
                                2.0 / sqrt_n * opt.k_asymptotic));

  // Optimality: success at k_exact against a brute-force scan over k.
  const long k_scan = static_cast<long>(std::ceil(opt.k_asymptotic)) + 2;
  double best = 0.0;
  for (long k = 0; k <= k_scan; ++k) {
    const double amp = grover::grover_state(problem, k).target_amplitude;
    best = std::max(best, amp * amp);
  }
  records.push_back(
      make_record("grover", base, "success_prob", opt.success_probability, best, 1e-12));

  // Matrix-free simulation against the closed-form plane rotation, over a
  // window of twice the optimal iteration count.
  const long k_max = std::min(2 * std::max(opt.k_exact, 1L), 200L);
  double worst_dev = 0.0;
  for (long k = 0; k <= k_max; ++k) {
    const hilbert::StateVector state = grover::grover_state_matrix(problem, k);
    const grover::PlaneState plane = grover::grover_state(problem, k);
    const double residual =
        n > 1 ? plane.residual_amplitude / std::sqrt(static_cast<double>(n - 1)) : 0.0;
    for (int i = 0; i < state.dim(); ++i) {
      const double want = (i + 1 == problem.target) ? plane.target_amplitude : residual;
      worst_dev = std::max(worst_dev, std::abs(state[i].real() - want));
      worst_dev = std::max(worst_dev, std::abs(state[i].imag()));
    }
  }
  {
    Params p = base;
    p.push_back(pp("k_max", static_cast<double>(k_max)));
    records.push_back(make_record("grover", p, "matrix_deviation", worst_dev, 0.0, 1e-10));
  }

  // Information speed of the induced probability path.
  const grover::ProbabilityPath path = grover::groverian_path(n);
  double worst_f = 4.0;
  for (double theta : linspace(0.0, pi / 2.0, 101)) {
    const double f = grover::fisher_information(path, theta, grover::FisherMode::analytic);
    if (std::abs(f - 4.0) > std::abs(worst_f - 4.0)) worst_f = f;
  }
  records.push_back(make_record("grover", base, "fisher", worst_f, 4.0, 1e-10));
  return records;
}

// ---------------------------------------------------------------------------
// fisher

void fisher_grid_records(std::vector<ResultRecord>& records, long n, int grid_points) {
  const grover::ProbabilityPath path = grover::groverian_path(n);
  const rvec grid = linspace(0.0, pi / 2.0, grid_points);

  double worst_analytic = 4.0, worst_fd = 4.0;
  for (double theta : grid) {
    const double fa = grover::fisher_information(path, theta, grover::FisherMode::analytic);
    const double fd =
        grover::fisher_information(path, theta, grover::FisherMode::finite_difference);
    if (std::abs(fa - 4.0) > std::abs(worst_analytic - 4.0)) worst_analytic = fa;
    if (std::abs(fd - 4.0) > std::abs(worst_fd - 4.0)) worst_fd = fd;
  }
  const Params base{pp("N", static_cast<double>(n)),
                    pp("grid_points", static_cast<double>(grid_points))};
  records.push_back(make_record("fisher", base, "fisher_analytic", worst_analytic, 4.0, 1e-10));
  records.push_back(make_record("fisher", base, "fisher_fd", worst_fd, 4.0, 1e-6));
}

std::vector<ResultRecord> run_fisher(const ExperimentConfig& config) {
  const int grid_points =
      static_cast<int>(long_param(config, "grid_points", 1000, 10, 1000000));
  std::vector<ResultRecord> records;

  // Constancy of F along the Groverian path, analytic and finite-difference.
  if (config.has_param("N")) {
    fisher_grid_records(records, long_param(config, "N", 64, 2, grover::kMatrixSimulationCap * 1024L),
                        grid_points);
  } else {
    for (long n : {2L, 4L, 16L, 256L, 4096L}) fisher_grid_records(records, n, grid_points);
  }

  // Euler-Lagrange residual of the closed-form amplitude oscillator sampled
  // on a uniform grid (the information-metric counterpart of the
  // state-space geodesic check).
  const long n_el = config.has_param("N")
                        ? long_param(config, "N", 64, 2, grover::kMatrixSimulationCap * 1024L)
                        : 16L;
  const double h = config.step.value_or(1e-3);
  if (!(h > 0)) throw ConfigError("integrator.h must be positive");
  {
    const grover::ProbabilityPath path = grover::groverian_path(n_el);
    const rvec q0 = path.amplitudes(0.0);
    const rvec qdot0 = path.amplitude_rates(0.0);
    const int steps = static_cast<int>(std::ceil(pi / 2.0 / h));
    std::vector<rvec> samples;
    samples.reserve(static_cast<std::size_t>(steps) + 1);
    rvec f_samples;
    for (int i = 0; i <= steps; ++i) {
      samples.push_back(fisher::sho_amplitude_solution(q0, qdot0, 4.0, i * h));
      f_samples.push_back(4.0);
    }
    const fisher::ElResidual res =
        fisher::el_residual(samples, f_samples, fisher::lagrange_multiplier_for_grover(4.0), h);
    const Params p{pp("N", static_cast<double>(n_el)), pp("h", h)};
    records.push_back(make_record("fisher", p, "el_residual", res.max_abs, 0.0, 1e-6));
  }

  // Lagrangian density identity L = sqrt(F)/2 and the flat-phase quantum
  // Fisher information (which reduces to F/4 = 1 on the Groverian path).
  {
    const grover::ProbabilityPath path = grover::groverian_path(n_el);
    const fisher::PhasedPath phased(
        static_cast<int>(n_el), [&](double t) { return path.amplitudes(t); },
        [&](double) { return rvec(static_cast<std::size_t>(n_el), 0.0); },
        [&](double t) { return path.amplitude_rates(t); },
        [&](double) { return rvec(static_cast<std::size_t>(n_el), 0.0); });
    double worst_l = 0.0, worst_qf = 1.0;
    for (double theta : linspace(0.0, pi / 2.0, 101)) {
      const double f = grover::fisher_information(path, theta, grover::FisherMode::analytic);
      const double l = fisher::lagrangian_density(path.amplitude_rates(theta));
      worst_l = std::max(worst_l, std::abs(l - 0.5 * std::sqrt(f)));
      const double qf = fisher::quantum_fisher(phased, theta);
      if (std::abs(qf - 1.0) > std::abs(worst_qf - 1.0)) worst_qf = qf;
    }
    const Params p{pp("N", static_cast<double>(n_el))};
    records.push_back(make_record("fisher", p, "lagrangian_identity", worst_l, 0.0, 1e-12));
    records.push_back(make_record("fisher", p, "quantum_fisher_flat_phase", worst_qf, 1.0, 1e-10));
  }

  // Annealing schedule: pinned endpoints/midpoint and strict monotonicity.
  for (long n : {4L, 64L, 1024L}) {
    const Params p{pp("N_aqc", static_cast<double>(n))};
    records.push_back(
        make_record("fisher", p, "aqc_start", fisher::aqc_schedule(n, 0.0), 0.0, 1e-12));
    records.push_back(
        make_record("fisher", p, "aqc_mid", fisher::aqc_schedule(n, 0.5), 0.5, 1e-12));
    records.push_back(
        make_record("fisher", p, "aqc_end", fisher::aqc_schedule(n, 1.0), 1.0, 1e-12));
    bool monotone = true;
    double prev = fisher::aqc_schedule(n, 0.0);
    const int grid = 10000;
    for (int i = 1; i <= grid; ++i) {
      const double x = fisher::aqc_schedule(n, static_cast<double>(i) / grid);
      if (!(x > prev)) { monotone = false; break; }
      prev = x;
    }
    records.push_back(
        make_record("fisher", p, "aqc_monotone", monotone ? 1.0 : 0.0, 1.0, 0.0));
  }
  return records;
}

// ---------------------------------------------------------------------------
// anandan-aharonov

std::vector<ResultRecord> run_anandan_aharonov(const ExperimentConfig& config) {
  const long n_max = long_param(config, "N", 8, 2, 64);
  const long trials = long_param(config, "trials", 50, 1, 100000);
  SplitMix64 rng(config.seed);
  const double hbars[] = {1.0, 0.5, 2.0};

  std::vector<ResultRecord> records;
  for (long trial = 0; trial < trials; ++trial) {
    const int dim = 2 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n_max - 1));
    const double hbar = hbars[trial % 3];
    const hilbert::Hamiltonian h(hilbert::random_hermitian(dim, rng), hbar);
    const hilbert::StateVector psi = hilbert::random_state(dim, rng);
    const auto [speed, dispersion_rate] = hilbert::speed_equals_dispersion_check(h, psi);
    const Params p{pp("trial", std::to_string(trial)), pp("dim", static_cast<double>(dim)),
                   pp("hbar", hbar)};
    records.push_back(make_record("anandan-aharonov", p, "speed_sq_vs_dispersion_sq",
                                  speed * speed, dispersion_rate * dispersion_rate, 1e-12));
  }

  // The Groverian two-level generator ties the state-space speed to the
  // information speed: v^2 = F/4.
  {
    const double theta = 0.3;
    const hilbert::Hamiltonian h = groverian_generator(1.0);
    const hilbert::StateVector psi = plane_state(theta);
    const double v = hilbert::fubini_study_speed(psi, h.schrodinger_rate(psi));
    const double f = grover::fisher_information(grover::groverian_path(4), theta,
                                                grover::FisherMode::analytic);
    const Params p{pp("theta", theta)};
    records.push_back(
        make_record("anandan-aharonov", p, "speed_sq_vs_quarter_fisher", v * v, f / 4.0, 1e-10));
  }
  return records;
}

// ---------------------------------------------------------------------------
// gravity

std::vector<ResultRecord> run_gravity(const ExperimentConfig& config) {
  const double xi_a = config.param("xi_a", 0.03);
  const double t_end = config.end.value_or(60.0);
  const double h = config.step.value_or(1e-3);
  const models::FluidSphereModel model = models::FluidSphereModel::geometric(xi_a);
  const double omega_ref = models::gr_sho_frequency(model);  // = 1 in these units

  std::vector<ResultRecord> records;
  const double amplitudes[] = {1e-2, 3e-3, 1e-3};
  rvec errors;
  for (double xi0 : amplitudes) {
    const models::RadialOscillation osc =
        models::simulate_radial_oscillation(model, xi0, t_end, h);
    errors.push_back(std::abs(osc.fitted_frequency - omega_ref));
    const Params p{pp("xi0", xi0), pp("xi_a", xi_a),
                   pp("crossings", static_cast<double>(osc.crossings))};
    records.push_back(make_record("gravity", p, "fitted_frequency", osc.fitted_frequency,
                                  omega_ref, 1e-3 * omega_ref));
  }

  // The fit error must shrink strictly with amplitude (the leading
  // correction is O(xi0^2)).
  const bool monotone = errors[0] > errors[1] && errors[1] > errors[2];
  records.push_back(make_record("gravity", {pp("xi_a", xi_a)}, "amplitude_monotonicity",
                                monotone ? 1.0 : 0.0, 1.0, 0.0));

  // Interior/exterior matching at the surface.
  records.push_back(make_record("gravity", {pp("xi_a", xi_a)}, "surface_matching",
                                models::surface_matching_defect(model), 0.0, 1e-12));

  // Cross-check: the reduced coordinate-time ODE against the full 2D
  // affine-parameter geodesic of the interior metric.
  {
    const double t_cross = std::min(t_end, 40.0);
    const models::RadialOscillation reduced =
        models::simulate_radial_oscillation(model, 1e-3, t_cross, h);
    const models::RadialOscillation affine =
        models::radial_oscillation_via_geodesic(model, 1e-3, t_cross, h);
    const Params p{pp("xi0", 1e-3), pp("xi_a", xi_a), pp("t_end", t_cross)};
    records.push_back(make_record("gravity", p, "affine_cross_check",
                                  affine.fitted_frequency, reduced.fitted_frequency,
                                  5e-5 * omega_ref));
  }
  return records;
}

// ---------------------------------------------------------------------------
// thermal

models::RuchhardtModel thermal_model(const ExperimentConfig& config) {
  return models::RuchhardtModel(config.param("P0", 101325.0), config.param("V0", 1e-2),
                                config.param("area", 2e-4), config.param("mass", 0.05),
                                config.param("gamma", 1.4));
}

std::vector<ResultRecord> run_thermal(const ExperimentConfig& config) {
  const models::RuchhardtModel model = thermal_model(config);
  const double amplitude = config.param("amplitude", 0.01);
  const double h = config.step.value_or(2e-4);
  const double omega_ref = models::ruchhardt_frequency(model);

  const Params base{pp("P0", model.P0),   pp("V0", model.V0), pp("area", model.A),
                    pp("mass", model.m),  pp("gamma", model.gamma),
                    pp("amplitude", amplitude)};

  std::vector<ResultRecord> records;

  // Piston frequency measured from the Jacobi-metric geodesic: integrate a
  // quarter oscillation (center to turning point) and convert.
  const models::JacobiSystem system = models::ruchhardt_jacobi_system(model, amplitude);
  const models::TimedTrajectory traj = models::jacobi_geodesic_to_newton(
      system, rvec{0.0}, rvec{1.0}, 10.0 * models::ruchhardt_period(model), h);
  const double omega_meas = quarter_period_frequency(system, traj);
  records.push_back(make_record("thermal", base, "frequency_jacobi", omega_meas, omega_ref,
                                1e-6 * omega_ref));

  // Sample-by-sample match with the Newtonian oscillator on the same window.
  double worst = 0.0;
  const double v0 = omega_ref * amplitude;
  for (std::size_t i = 0; i < traj.t.size(); ++i)
    worst = std::max(worst, std::abs(traj.q[i][0] -
                                     models::newton_sho_solution(0.0, v0, omega_ref, traj.t[i])));
  records.push_back(make_record("thermal", base, "trajectory_match", worst, 0.0, 1e-6));

  // gamma recovered from the period formula (pure algebra round trip).
  const double gamma_rt = models::gamma_from_period(model, models::ruchhardt_period(model));
  records.push_back(make_record("thermal", base, "gamma_roundtrip", gamma_rt, model.gamma,
                                1e-14 * model.gamma));
  return records;
}

// ---------------------------------------------------------------------------
// jacobi

std::vector<ResultRecord> run_jacobi(const ExperimentConfig& config) {
  const long trials = long_param(config, "trials", 20, 1, 10000);
  const double h = config.step.value_or(5e-4);
  SplitMix64 rng(config.seed);

  std::vector<ResultRecord> records;
  for (long trial = 0; trial < trials; ++trial) {
    const double mass = rng.uniform(0.5, 2.0);
    const double omega = rng.uniform(0.5, 3.0);
    const double amp = rng.uniform(0.5, 2.0);
    const double phi0 = rng.uniform(-1.2, 1.2);

    models::JacobiSystem system;
    system.dim = 1;
    system.mass = mass;
    system.energy = 0.5 * mass * omega * omega * amp * amp;
    system.potential = [mass, omega](const rvec& q) {
      return 0.5 * mass * omega * omega * q[0] * q[0];
    };
    system.gradient = [mass, omega](const rvec& q) {
      return rvec{mass * omega * omega * q[0]};
    };

    const double q0 = amp * std::sin(phi0);
    const double v0 = omega * amp * std::cos(phi0);
    const double t_turn = (pi / 2.0 - phi0) / omega;
    // Alternate between windows that stay inside the turning point and
    // windows that run into it (the integrator stops there either way).
    const double t_end = (trial % 2 == 0 ? 0.8 : 2.0) * t_turn;

    const models::TimedTrajectory traj =
        models::jacobi_geodesic_to_newton(system, rvec{q0}, rvec{1.0}, t_end, h);
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.t.size(); ++i)
      worst = std::max(worst, std::abs(traj.q[i][0] -
                                       models::newton_sho_solution(q0, v0, omega, traj.t[i])));
    const Params p{pp("trial", std::to_string(trial)), pp("mass", mass), pp("omega", omega),
                   pp("amplitude", amp), pp("phi0", phi0),
                   pp("hits_turning", trial % 2 == 0 ? 0.0 : 1.0)};
    records.push_back(make_record("jacobi", p, "newton_match", worst, 0.0, 1e-6));
  }

  // A 2D circular orbit: constant kinetic energy, so the time remap is
  // exercised far from any turning point and in more than one dimension.
  {
    const double mass = 1.3, omega = 2.1, amp = 0.7;
    models::JacobiSystem system;
    system.dim = 2;
    system.mass = mass;
    system.energy = mass * omega * omega * amp * amp;  // T = V = E/2 on the circle
    system.potential = [mass, omega](const rvec& q) {
      return 0.5 * mass * omega * omega * (q[0] * q[0] + q[1] * q[1]);
    };
    system.gradient = [mass, omega](const rvec& q) {
      return rvec{mass * omega * omega * q[0], mass * omega * omega * q[1]};
    };
    const double t_end = 2.0 * (2.0 * pi / omega);
    const models::TimedTrajectory traj =
        models::jacobi_geodesic_to_newton(system, rvec{amp, 0.0}, rvec{0.0, 1.0}, t_end, h);
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
      worst = std::max(worst, std::abs(traj.q[i][0] - amp * std::cos(omega * traj.t[i])));
      worst = std::max(worst, std::abs(traj.q[i][1] - amp * std::sin(omega * traj.t[i])));
    }
    const Params p{pp("mass", mass), pp("omega", omega), pp("amplitude", amp),
                   pp("dim", 2.0)};
    records.push_back(make_record("jacobi", p, "circular_orbit_match", worst, 0.0, 1e-6));
  }
  return records;
}

// ---------------------------------------------------------------------------
// phases

std::vector<ResultRecord> run_phases(const ExperimentConfig& config) {
  const long trials = long_param(config, "trials", 50, 1, 10000);
  const int dim = static_cast<int>(long_param(config, "dim", 4, 2, 64));
  const int samples = static_cast<int>(long_param(config, "samples", 801, 9, 1000000));
  SplitMix64 rng(config.seed);

  const double t_total = 0.8;  // keeps |<psi(0)|psi(T)>| well away from zero
  const double dt = t_total / (samples - 1);

  std::vector<ResultRecord> records;
  for (long trial = 0; trial < trials; ++trial) {
    // A horizontal great-circle trajectory with a random tangent...
    const hilbert::StateVector psi0 = hilbert::random_state(dim, rng);
    cvec u(static_cast<std::size_t>(dim));
    for (auto& z : u) z = cdouble(rng.gaussian(), rng.gaussian());
    const cdouble overlap = inner(psi0.amplitudes(), u);
    u = axpy(-overlap, psi0.amplitudes(), u);
    const double un = norm(u);
    for (auto& z : u) z /= un;

    std::vector<hilbert::StateVector> base;
    base.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i)
      base.push_back(hilbert::horizontal_geodesic(psi0, u, 1.0, i * dt));

    // ... and a closed gauge loop on top of it: smooth wiggles plus an
    // integer winding, so the ray trajectory is unchanged.
    const double a0 = rng.uniform(-pi, pi);
    const double a1 = rng.uniform(-0.4, 0.4);
    const double a2 = rng.uniform(-0.4, 0.4);
    const double a3 = rng.uniform(-0.4, 0.4);
    const long winding = static_cast<long>(rng.next() % 5) - 2;
    auto alpha = [&](double t) {
      const double w = pi * t / t_total;
      return a0 + a1 * std::sin(w) + a2 * std::sin(2.0 * w) + a3 * std::sin(3.0 * w) +
             2.0 * pi * static_cast<double>(winding) * t / t_total;
    };
    std::vector<hilbert::StateVector> transformed;
    transformed.reserve(base.size());
    for (int i = 0; i < samples; ++i) {
      const double a = alpha(i * dt);
      transformed.push_back(
          hilbert::StateVector(scaled(std::polar(1.0, a), base[static_cast<std::size_t>(i)].amplitudes())));
    }

    const double gamma_base = hilbert::berry_phase(base, dt);
    const double gamma_tr = hilbert::berry_phase(transformed, dt);
    const double defect = std::abs(principal_angle(gamma_tr - gamma_base));
    // The two evaluations share the same trapezoid rule; their difference
    // is bounded by the sum of the two a-posteriori truncation estimates.
    const double budget = hilbert::berry_phase_truncation_estimate(base, dt) +
                          hilbert::berry_phase_truncation_estimate(transformed, dt);
    const double tol = std::max(10.0 * budget, 1e-12);
    const Params p{pp("trial", std::to_string(trial)), pp("dim", static_cast<double>(dim)),
                   pp("winding", static_cast<double>(winding)),
                   pp("truncation_budget", budget)};
    records.push_back(make_record("phases", p, "gauge_invariance", defect, 0.0, tol));
  }

  // Stationary eigenstates: total phase is purely dynamical, geometric part
  // vanishes (including when the dynamical phase wraps several times).
  {
    rvec energies(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) energies[static_cast<std::size_t>(i)] = 1.7 - 0.9 * i;
    ComplexMatrix hm(dim);
    for (int i = 0; i < dim; ++i) hm(i, i) = energies[static_cast<std::size_t>(i)];
    const hilbert::Hamiltonian h(hm, 1.0);
    const double t_station = 5.0;
    const int n_station = 2001;
    const double dts = t_station / (n_station - 1);
    for (int eigen = 0; eigen < 2; ++eigen) {
      std::vector<hilbert::StateVector> traj;
      traj.reserve(n_station);
      for (int i = 0; i < n_station; ++i) {
        cvec amp(static_cast<std::size_t>(dim), 0.0);
        amp[static_cast<std::size_t>(eigen)] =
            std::polar(1.0, -energies[static_cast<std::size_t>(eigen)] * i * dts);
        traj.push_back(hilbert::StateVector(std::move(amp)));
      }
      const hilbert::PhaseDecomposition pd = hilbert::phase_decomposition(traj, h, dts);
      const Params p{pp("eigenstate", static_cast<double>(eigen)),
                     pp("energy", energies[static_cast<std::size_t>(eigen)]),
                     pp("winding", static_cast<double>(pd.winding))};
      records.push_back(make_record("phases", p, "stationary_geometric", pd.geometric, 0.0, 1e-10));
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// table1

std::vector<ResultRecord> run_table1(const ExperimentConfig& config) {
  std::vector<ResultRecord> records;

  // Quantum: Fubini-Study speed of the Schrodinger flow against dE/hbar.
  {
    const double hbar = 1.0;
    const hilbert::Hamiltonian h = groverian_generator(hbar);
    const hilbert::StateVector psi = plane_state(0.3);
    const double v = hilbert::fubini_study_speed(psi, h.schrodinger_rate(psi));
    const double dispersion_rate = hilbert::energy_dispersion(h, psi) / hbar;
    const Params p{pp("row", std::string("quantum")), pp("formula", std::string("dE/hbar"))};
    records.push_back(make_record("table1", p, "frequency", v, dispersion_rate, 1e-12));
  }

  // Quantum information: finite-difference sqrt(F)/2 against sqrt(F0)/2 = 1.
  {
    const grover::ProbabilityPath path = grover::groverian_path(4);
    double worst = 1.0;
    for (double theta : linspace(0.0, pi / 2.0, 51)) {
      const double f =
          grover::fisher_information(path, theta, grover::FisherMode::finite_difference);
      const double v = 0.5 * std::sqrt(f);
      if (std::abs(v - 1.0) > std::abs(worst - 1.0)) worst = v;
    }
    const Params p{pp("row", std::string("quantum-information")),
                   pp("formula", std::string("sqrt(F0)/2")), pp("N", 4.0)};
    records.push_back(make_record("table1", p, "frequency", worst, 1.0, 1e-6));
  }

  // Gravitational: fitted frequency of the nonlinear radial oscillation in
  // geometric units against sqrt(4 pi G rho / 3) = 1.
  {
    const models::FluidSphereModel model = models::FluidSphereModel::geometric();
    const models::RadialOscillation osc = models::simulate_radial_oscillation(
        model, 1e-3, config.end.value_or(60.0), config.step.value_or(1e-3));
    const double omega_ref = models::gr_sho_frequency(model);
    const Params p{pp("row", std::string("gravitational")),
                   pp("formula", std::string("sqrt(4 pi G rho/3)")), pp("xi0", 1e-3)};
    records.push_back(make_record("table1", p, "frequency", osc.fitted_frequency, omega_ref,
                                  1e-3 * omega_ref));
  }

  // Thermal: Jacobi-geodesic quarter period against sqrt(P0 A^2 gamma/(m V0)).
  {
    ExperimentConfig defaults;
    const models::RuchhardtModel model = thermal_model(defaults);
    const double amplitude = 0.01;
    const models::JacobiSystem system = models::ruchhardt_jacobi_system(model, amplitude);
    const models::TimedTrajectory traj = models::jacobi_geodesic_to_newton(
        system, rvec{0.0}, rvec{1.0}, 10.0 * models::ruchhardt_period(model),
        config.step.value_or(2e-4));
    const double omega_ref = models::ruchhardt_frequency(model);
    const Params p{pp("row", std::string("thermal")),
                   pp("formula", std::string("sqrt(P0 A^2 gamma/(m V0))")),
                   pp("gamma", model.gamma)};
    records.push_back(make_record("table1", p, "frequency",
                                  quarter_period_frequency(system, traj), omega_ref,
                                  1e-6 * omega_ref));
  }
  return records;
}

}  // namespace

const std::vector<ExperimentEntry>& experiment_registry() {
  static const std::vector<ExperimentEntry> entries = {
      {"grover",
       "search rotation: optimal iteration count, matrix-free vs closed form, information speed",
       {"N"},
       &run_grover},
      {"fisher",
       "Fisher information constancy, Euler-Lagrange residual, annealing schedule",
       {"N", "grid_points"},
       &run_fisher},
      {"anandan-aharonov",
       "evolution speed equals energy dispersion over random states and Hamiltonians",
       {"N", "trials"},
       &run_anandan_aharonov},
      {"gravity",
       "radial oscillation frequency inside a uniform-density sphere vs sqrt(4 pi G rho/3)",
       {"xi_a"},
       &run_gravity},
      {"thermal",
       "piston oscillator via the Jacobi metric vs the adiabatic frequency formula",
       {"P0", "V0", "area", "mass", "gamma", "amplitude"},
       &run_thermal},
      {"jacobi",
       "Jacobi-metric geodesics remapped to time vs Newtonian oscillator trajectories",
       {"trials"},
       &run_jacobi},
      {"phases",
       "gauge invariance of the geometric phase; stationary states have none",
       {"trials", "dim", "samples"},
       &run_phases},
      {"table1",
       "one frequency row per construction: quantum, information, gravitational, thermal",
       {},
       &run_table1},
  };
  return entries;
}

}  // namespace geosho::runner
