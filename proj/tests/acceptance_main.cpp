// Acceptance gate: ten end-to-end criteria, one [PASS]/[FAIL] line each.
// Exit code 0 only when every criterion holds; 1 otherwise.  Tolerances are
// pinned here, not read from anywhere else, so a regression cannot loosen
// them silently.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "geosho/fisher.hpp"
#include "geosho/geodesic.hpp"
#include "geosho/grover.hpp"
#include "geosho/hilbert.hpp"
#include "geosho/models.hpp"
#include "geosho/numerics.hpp"
#include "geosho/runner.hpp"

using namespace geosho;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Record one bound check; failing any check fails the criterion.
  void require(bool ok) { pass = pass && ok; }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// --------------------------------------------------------------------------
// 1. The output-distribution family of the search rotation has constant
//    information F = 4 for every database size, in both evaluation modes.
Outcome criterion_fisher_constancy() {
  Outcome out;
  const double kTolAnalytic = 1e-10, kTolFd = 1e-6;
  double worst_an = 0.0, worst_fd = 0.0;
  for (long n : {2L, 4L, 16L, 256L, 4096L}) {
    const grover::ProbabilityPath path = grover::groverian_path(n);
    for (int i = 0; i < 1000; ++i) {
      const double theta = (pi / 2.0) * i / 999.0;
      worst_an = std::max(worst_an, std::abs(grover::fisher_information(path, theta) - 4.0));
      worst_fd = std::max(
          worst_fd, std::abs(grover::fisher_information(
                                 path, theta, grover::FisherMode::finite_difference) -
                             4.0));
    }
  }
  out.require(worst_an <= kTolAnalytic);
  out.require(worst_fd <= kTolFd);
  out.detail << "worst |F-4|: analytic " << fmt(worst_an) << " (tol " << fmt(kTolAnalytic)
             << "), fd " << fmt(worst_fd) << " (tol " << fmt(kTolFd) << ")";
  return out;
}

// --------------------------------------------------------------------------
// 2. Ray speed equals energy dispersion over hbar for random states and
//    Hamiltonians, and equals sqrt(F)/2 on the search path.
Outcome criterion_speed_dispersion() {
  Outcome out;
  const double kTolPairs = 1e-12, kTolFisher = 1e-10;
  SplitMix64 rng(424242);
  double worst_pair = 0.0;
  const double hbars[] = {1.0, 0.5, 2.0};
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + static_cast<int>(rng.next() % 7);  // 2..8
    const double hbar = hbars[trial % 3];
    const hilbert::Hamiltonian h(hilbert::random_hermitian(dim, rng), hbar);
    const hilbert::StateVector psi = hilbert::random_state(dim, rng);
    const auto [speed, rate] = hilbert::speed_equals_dispersion_check(h, psi);
    worst_pair = std::max(worst_pair, std::abs(speed * speed - rate * rate));
  }
  out.require(worst_pair <= kTolPairs);

  // plane rotation at theta = 0.3 against the information of the
  // two-outcome search path
  const double theta = 0.3;
  ComplexMatrix gen(2);
  gen(0, 1) = cdouble(0.0, -1.0);
  gen(1, 0) = cdouble(0.0, 1.0);
  const hilbert::Hamiltonian h(gen, 1.0);
  const hilbert::StateVector psi(cvec{std::sin(theta), std::cos(theta)});
  const auto [speed, rate] = hilbert::speed_equals_dispersion_check(h, psi);
  const double f0 = grover::fisher_information(grover::groverian_path(2), theta);
  const double defect = std::abs(speed * speed - f0 / 4.0);
  out.require(defect <= kTolFisher);

  out.detail << "worst |v^2-(dE/hbar)^2| " << fmt(worst_pair) << " over 100 pairs (tol "
             << fmt(kTolPairs) << "), |v^2-F/4| " << fmt(defect) << " (tol "
             << fmt(kTolFisher) << ")";
  return out;
}

// --------------------------------------------------------------------------
// 3. Iteration counts: exact optimum for n = 4, asymptotic (pi/4) sqrt(n)
//    scaling, and matrix-free simulation against the closed form.
Outcome criterion_iteration_counts() {
  Outcome out;
  const grover::OptimalIterations four = grover::optimal_iterations(grover::GroverProblem(4, 1));
  out.require(four.k_exact == 1);
  out.require(four.success_probability >= 1.0 - 1e-12);

  double worst_rel = 0.0;
  for (long n = 64; n <= 4096; n *= 2) {
    const grover::OptimalIterations o = grover::optimal_iterations(grover::GroverProblem(n, 1));
    const double rel = std::abs(static_cast<double>(o.k_exact) / o.k_asymptotic - 1.0);
    out.require(rel <= 2.0 / std::sqrt(static_cast<double>(n)));
    worst_rel = std::max(worst_rel, rel * std::sqrt(static_cast<double>(n)) / 2.0);
  }

  double worst_dev = 0.0;
  for (long n : {64L, 4096L}) {
    const grover::GroverProblem p(n, n / 3 + 1);
    const long k_top = grover::optimal_iterations(p).k_exact;
    for (long k : {0L, k_top / 2, k_top}) {
      const hilbert::StateVector state = grover::grover_state_matrix(p, k);
      const grover::PlaneState plane = grover::grover_state(p, k);
      const double off = plane.residual_amplitude / std::sqrt(static_cast<double>(n - 1));
      for (long i = 0; i < n; ++i) {
        const cdouble amp = state[static_cast<int>(i)];
        const double expected = (i == p.target - 1) ? plane.target_amplitude : off;
        worst_dev = std::max(worst_dev, std::abs(amp - cdouble(expected)));
      }
    }
  }
  out.require(worst_dev <= 1e-10);

  out.detail << "n=4: k=1 with success 1-" << fmt(1.0 - four.success_probability)
             << "; scaling margin " << fmt(worst_rel) << " of budget; matrix dev "
             << fmt(worst_dev) << " (tol 1e-10)";
  return out;
}

// --------------------------------------------------------------------------
// 4. Both geodesic trajectory types satisfy the oscillator equation with
//    second-order convergence under grid refinement.
Outcome criterion_oscillator_residuals() {
  Outcome out;
  const double steps[] = {1e-2, 5e-3, 2.5e-3};
  double res_state[3], res_amp[3];

  const hilbert::StateVector psi0(cvec{1.0, 0.0});
  const cvec dot0{0.0, 1.0};
  const rvec q0{1.0, 0.0}, qd0{0.0, 1.0};
  for (int j = 0; j < 3; ++j) {
    const double h = steps[j];
    const int n = static_cast<int>(std::lround(1.0 / h)) + 1;
    std::vector<hilbert::StateVector> traj;
    std::vector<rvec> q;
    rvec f;
    for (int i = 0; i < n; ++i) {
      traj.push_back(hilbert::horizontal_geodesic(psi0, dot0, 1.0, i * h));
      q.push_back(fisher::sho_amplitude_solution(q0, qd0, 4.0, i * h));
      f.push_back(4.0);
    }
    res_state[j] = hilbert::sho_residual_max(traj, 1.0, h);
    res_amp[j] = fisher::el_residual(q, f, fisher::lagrange_multiplier_for_grover(4.0), h).max_abs;
  }
  const double r1 = res_state[0] / res_state[1], r2 = res_state[1] / res_state[2];
  const double s1 = res_amp[0] / res_amp[1], s2 = res_amp[1] / res_amp[2];
  for (double ratio : {r1, r2, s1, s2}) out.require(ratio >= 3.5);
  out.require(res_state[2] <= 1e-5);
  out.require(res_amp[2] <= 1e-5);
  out.detail << "state-ray ratios " << fmt(r1) << "/" << fmt(r2) << ", amplitude ratios "
             << fmt(s1) << "/" << fmt(s2) << " (>= 3.5); finest residuals "
             << fmt(res_state[2]) << ", " << fmt(res_amp[2]) << " (tol 1e-5)";
  return out;
}

// --------------------------------------------------------------------------
// 5. Interior-sphere radial oscillation: frequency within 0.1% of the
//    newtonian value, error monotone in amplitude, exact surface matching.
Outcome criterion_interior_sphere() {
  Outcome out;
  const models::FluidSphereModel m = models::FluidSphereModel::geometric(0.03);
  const double xi0s[] = {1e-2, 3e-3, 1e-3};
  double errs[3];
  for (int i = 0; i < 3; ++i) {
    const models::RadialOscillation osc =
        models::simulate_radial_oscillation(m, xi0s[i], 60.0, 1e-3);
    errs[i] = std::abs(osc.fitted_frequency - models::gr_sho_frequency(m));
  }
  out.require(errs[2] <= 1e-3);
  out.require(errs[0] > errs[1]);
  out.require(errs[1] > errs[2]);

  const double defect_geom = models::surface_matching_defect(m);
  const double defect_si = models::surface_matching_defect(
      models::FluidSphereModel(1000.0, 6.674e-11, 2.99792458e8, 1.0));
  out.require(defect_geom <= 1e-12);
  out.require(defect_si <= 1e-12);

  out.detail << "freq errors " << fmt(errs[0]) << " > " << fmt(errs[1]) << " > "
             << fmt(errs[2]) << " (finest tol 1e-3); surface defects " << fmt(defect_geom)
             << ", " << fmt(defect_si) << " (tol 1e-12)";
  return out;
}

// --------------------------------------------------------------------------
// 6. Jacobi-metric trajectories reproduce Newton for random oscillators,
//    and the adiabatic-index inversion is exact.
Outcome criterion_jacobi_newton() {
  Outcome out;
  SplitMix64 rng(2026);
  double worst_q = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double mass = rng.uniform(0.5, 2.0);
    const double omega = rng.uniform(0.5, 3.0);
    const double amp = rng.uniform(0.5, 2.0);
    const double phi0 = rng.uniform(-1.2, 1.2);

    models::JacobiSystem sys;
    sys.dim = 1;
    sys.mass = mass;
    sys.energy = 0.5 * mass * omega * omega * amp * amp;
    sys.potential = [=](const rvec& q) { return 0.5 * mass * omega * omega * q[0] * q[0]; };
    sys.gradient = [=](const rvec& q) { return rvec{mass * omega * omega * q[0]}; };

    const double t_turn = (0.5 * pi - phi0) / omega;
    const models::TimedTrajectory traj = models::jacobi_geodesic_to_newton(
        sys, rvec{amp * std::sin(phi0)}, rvec{1.0}, 0.8 * t_turn, 5e-4);
    for (std::size_t k = 0; k < traj.t.size(); ++k) {
      const double expected = amp * std::sin(omega * traj.t[k] + phi0);
      worst_q = std::max(worst_q, std::abs(traj.q[k][0] - expected));
    }
  }
  out.require(worst_q <= 1e-6);

  double worst_gamma = 0.0;
  const double gammas[] = {1.2, 1.4, 5.0 / 3.0};
  for (int i = 0; i < 3; ++i) {
    const models::RuchhardtModel model(90000.0 + 10000.0 * i, 0.008 + 0.002 * i,
                                       1.5e-4 + 1e-5 * i, 0.04 + 0.01 * i, gammas[i]);
    const double back = models::gamma_from_period(model, models::ruchhardt_period(model));
    worst_gamma = std::max(worst_gamma, std::abs(back - gammas[i]) / gammas[i]);
  }
  out.require(worst_gamma <= 1e-14);

  out.detail << "worst |q - newton| " << fmt(worst_q)
             << " over 20 random oscillators (tol 1e-6); gamma round trip " << fmt(worst_gamma)
             << " rel (tol 1e-14)";
  return out;
}

// --------------------------------------------------------------------------
// 7. The geometric phase is invariant under random gauge loops (within the
//    quadrature truncation budget) and vanishes for stationary states.
Outcome criterion_gauge_invariance() {
  Outcome out;
  SplitMix64 rng(7);
  const int dim = 4, samples = 801;
  const double t_total = 0.8, dt = t_total / (samples - 1);
  double worst_margin = 0.0;  // defect / allowance, should stay < 1
  for (int trial = 0; trial < 50; ++trial) {
    const hilbert::StateVector psi0 = hilbert::random_state(dim, rng);
    cvec u(dim);
    for (auto& z : u) z = cdouble(rng.gaussian(), rng.gaussian());
    const cdouble overlap = inner(psi0.amplitudes(), u);
    for (int c = 0; c < dim; ++c) u[static_cast<std::size_t>(c)] -= overlap * psi0[c];
    const double nu = norm(u);
    for (auto& z : u) z /= nu;

    const double a0 = rng.uniform(-pi, pi);
    const double a1 = rng.uniform(-0.4, 0.4);
    const double a2 = rng.uniform(-0.4, 0.4);
    const double a3 = rng.uniform(-0.4, 0.4);
    const int winding = static_cast<int>(rng.next() % 5) - 2;

    std::vector<hilbert::StateVector> base, gauged;
    for (int i = 0; i < samples; ++i) {
      const double t = i * dt;
      const hilbert::StateVector s = hilbert::horizontal_geodesic(psi0, u, 1.0, t);
      base.push_back(s);
      const double w = pi * t / t_total;
      const double alpha = a0 + a1 * std::sin(w) + a2 * std::sin(2.0 * w) +
                           a3 * std::sin(3.0 * w) + 2.0 * pi * winding * t / t_total;
      gauged.push_back(hilbert::StateVector(scaled(std::polar(1.0, alpha), s.amplitudes())));
    }
    const double g_base = hilbert::berry_phase(base, dt);
    const double g_tr = hilbert::berry_phase(gauged, dt);
    const double defect = std::abs(principal_angle(g_tr - g_base));
    const double allowance = std::max(10.0 * (hilbert::berry_phase_truncation_estimate(base, dt) +
                                              hilbert::berry_phase_truncation_estimate(gauged, dt)),
                                      1e-12);
    out.require(defect <= allowance);
    worst_margin = std::max(worst_margin, defect / allowance);
  }

  // stationary eigenstate: total phase is purely dynamical
  ComplexMatrix hm(2);
  hm(0, 0) = 1.7;
  hm(1, 1) = -0.9;
  const hilbert::Hamiltonian h(hm, 1.0);
  const int n = 2001;
  const double t_end = 5.0, dts = t_end / (n - 1);
  std::vector<hilbert::StateVector> traj;
  for (int i = 0; i < n; ++i)
    traj.push_back(hilbert::StateVector(cvec{std::polar(1.0, -1.7 * i * dts), 0.0}));
  const double stationary = std::abs(hilbert::phase_decomposition(traj, h, dts).geometric);
  out.require(stationary <= 1e-10);

  out.detail << "50 gauge loops, worst defect at " << fmt(worst_margin)
             << " of the truncation allowance; stationary geometric phase " << fmt(stationary)
             << " (tol 1e-10)";
  return out;
}

// --------------------------------------------------------------------------
// 8. The adiabatic interpolation schedule hits its anchors and is strictly
//    monotone.
Outcome criterion_adiabatic_schedule() {
  Outcome out;
  double worst_anchor = 0.0;
  bool monotone = true;
  for (long n : {4L, 64L, 1024L}) {
    worst_anchor = std::max(worst_anchor, std::abs(fisher::aqc_schedule(n, 0.0)));
    worst_anchor = std::max(worst_anchor, std::abs(fisher::aqc_schedule(n, 0.5) - 0.5));
    worst_anchor = std::max(worst_anchor, std::abs(fisher::aqc_schedule(n, 1.0) - 1.0));
    double prev = fisher::aqc_schedule(n, 0.0);
    for (int i = 1; i <= 10000; ++i) {
      const double x = fisher::aqc_schedule(n, static_cast<double>(i) / 10000.0);
      if (!(x > prev)) monotone = false;
      prev = x;
    }
  }
  out.require(worst_anchor <= 1e-12);
  out.require(monotone);
  out.detail << "anchor deviation " << fmt(worst_anchor) << " (tol 1e-12); strictly monotone on "
             << "10^4 grids: " << (monotone ? "yes" : "no");
  return out;
}

// --------------------------------------------------------------------------
// 9. The non-affine residual accepts correctly constructed (trajectory,
//    source) pairs and rejects the same trajectories without their source.
Outcome criterion_nonaffine_residual() {
  Outcome out;
  auto sphere = geodesic::MetricField(
      2,
      [](const rvec& x) {
        const double st = std::sin(x[0]);
        return SquareMatrix::diagonal(rvec{1.0, st * st});
      },
      geodesic::MetricField::Signature::riemannian,
      [](const rvec& x) {
        std::vector<SquareMatrix> d(2, SquareMatrix(2));
        d[0](1, 1) = std::sin(2.0 * x[0]);
        return d;
      });

  struct Repar {
    double a;
    double k;
  };
  // Amplitudes sized so the h^2 stencil error (~ h^2/12 * a k^4) stays well
  // inside the 1e-6 budget while every sigma'' still clears the control bar.
  const Repar cases[] = {{0.1, 1.0}, {0.05, 2.0}, {0.04, 3.0}};
  double worst_ok = 0.0, weakest_control = 1e300;
  for (const Repar& rp : cases) {
    auto sig_p = [&](double s) { return 1.0 + rp.a * rp.k * std::cos(rp.k * s); };
    auto sig_pp = [&](double s) { return -rp.a * rp.k * rp.k * std::sin(rp.k * s); };
    geodesic::GeodesicTrajectory traj;
    traj.affine = false;
    const int n = 1001;
    const double h = 1e-3;
    for (int i = 0; i < n; ++i) {
      const double s = i * h;
      traj.s.push_back(s);
      traj.x.push_back(rvec{pi / 2.0, s + rp.a * std::sin(rp.k * s)});
      traj.v.push_back(rvec{0.0, sig_p(s)});
      traj.quadratures.push_back(rvec{});
    }
    const double ok = geodesic::nonaffine_residual(
                          traj, sphere, [&](double s) { return sig_pp(s) / sig_p(s); })
                          .max_abs;
    const double control = geodesic::nonaffine_residual(traj, sphere, nullptr).max_abs;
    worst_ok = std::max(worst_ok, ok);
    weakest_control = std::min(weakest_control, control);
  }
  out.require(worst_ok <= 1e-6);
  out.require(weakest_control >= 1e-2);
  out.detail << "constructed pairs residual " << fmt(worst_ok)
             << " (tol 1e-6); sourceless control " << fmt(weakest_control) << " (>= 1e-2)";
  return out;
}

// --------------------------------------------------------------------------
// 10. The full default suite passes and its serialized output is
//     byte-identical across same-seed runs.
Outcome criterion_deterministic_output() {
  Outcome out;
  const std::vector<runner::ResultRecord> first = runner::run_selftest(7);
  const std::vector<runner::ResultRecord> second = runner::run_selftest(7);
  out.require(runner::all_pass(first));
  const std::string csv_a = runner::render_csv(first);
  const std::string csv_b = runner::render_csv(second);
  out.require(csv_a == csv_b);

  const std::string path_a = "acceptance_selftest_a.csv";
  const std::string path_b = "acceptance_selftest_b.csv";
  runner::emit_results(first, runner::OutputFormat::csv, path_a);
  runner::emit_results(second, runner::OutputFormat::csv, path_b);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  const std::string bytes_a = slurp(path_a);
  const bool disk_same = !bytes_a.empty() && bytes_a == slurp(path_b);
  out.require(disk_same);
  std::remove(path_a.c_str());
  std::remove(path_b.c_str());

  std::size_t failing = 0;
  for (const auto& r : first)
    if (!r.pass) ++failing;
  out.detail << first.size() << " records, " << failing
             << " failing; same-seed CSV byte-identical in memory and on disk: "
             << (csv_a == csv_b && disk_same ? "yes" : "no");
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*run)();
  };
  const Entry entries[] = {
      {"fisher-constancy", criterion_fisher_constancy},
      {"speed-dispersion-identity", criterion_speed_dispersion},
      {"iteration-counts", criterion_iteration_counts},
      {"oscillator-residuals", criterion_oscillator_residuals},
      {"interior-sphere-frequency", criterion_interior_sphere},
      {"jacobi-newton-equivalence", criterion_jacobi_newton},
      {"gauge-invariant-phase", criterion_gauge_invariance},
      {"adiabatic-schedule", criterion_adiabatic_schedule},
      {"nonaffine-residual", criterion_nonaffine_residual},
      {"deterministic-output", criterion_deterministic_output},
  };

  int failures = 0;
  int index = 0;
  for (const Entry& entry : entries) {
    ++index;
    Outcome outcome;
    std::string note;
    try {
      outcome = entry.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      note = std::string(" [exception: ") + e.what() + "]";
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %02d %s: %s%s\n", outcome.pass ? "PASS" : "FAIL", index, entry.name,
                outcome.detail.str().c_str(), note.c_str());
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
