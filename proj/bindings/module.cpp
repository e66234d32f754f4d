// Python bindings for the main library operations.  The interface sticks to
// plain numbers, strings, and dicts so the module is usable without any
// wrapper classes on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "geosho/errors.hpp"
#include "geosho/fisher.hpp"
#include "geosho/grover.hpp"
#include "geosho/hilbert.hpp"
#include "geosho/models.hpp"
#include "geosho/runner.hpp"

namespace py = pybind11;
using namespace geosho;

namespace {

py::dict record_to_dict(const runner::ResultRecord& r) {
  py::dict params;
  for (const auto& [k, v] : r.parameters) params[py::str(k)] = v;
  py::dict out;
  out["experiment"] = r.experiment;
  out["parameters"] = params;
  out["measured"] = r.measured;
  out["reference"] = r.reference;
  out["abs_err"] = r.abs_err;
  out["rel_err"] = r.rel_err;
  out["pass"] = r.pass;
  out["tolerance"] = r.tolerance;
  out["wall_ms"] = r.wall_ms;
  return out;
}

py::list records_to_list(const std::vector<runner::ResultRecord>& records) {
  py::list out;
  for (const auto& r : records) out.append(record_to_dict(r));
  return out;
}

grover::FisherMode mode_from_name(const std::string& mode) {
  if (mode == "analytic") return grover::FisherMode::analytic;
  if (mode == "fd" || mode == "finite_difference") return grover::FisherMode::finite_difference;
  throw ConfigError("unknown fisher mode '" + mode + "' (expected analytic or fd)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Geodesic-oscillator toolkit: information geometry of quantum "
            "search, interior-sphere and adiabatic-gas oscillations, and the "
            "experiment runner behind the geosho CLI.";
  m.attr("__version__") = "1.0.0";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  // ---- information geometry of the search rotation -----------------------
  m.def(
      "fisher_information",
      [](long n, double theta, const std::string& mode) {
        return grover::fisher_information(grover::groverian_path(n), theta,
                                          mode_from_name(mode));
      },
      py::arg("n"), py::arg("theta"), py::arg("mode") = "analytic",
      "Fisher information of the n-outcome search path at angle theta "
      "(constant and equal to 4).");

  m.def(
      "optimal_iterations",
      [](long n) {
        const grover::OptimalIterations o = grover::optimal_iterations(grover::GroverProblem(n, 1));
        py::dict out;
        out["k_exact"] = o.k_exact;
        out["k_asymptotic"] = o.k_asymptotic;
        out["success_probability"] = o.success_probability;
        return out;
      },
      py::arg("n"), "Optimal search iteration count and its success probability.");

  m.def(
      "success_probability",
      [](long n, long k) {
        const grover::PlaneState s = grover::grover_state(grover::GroverProblem(n, 1), k);
        return s.target_amplitude * s.target_amplitude;
      },
      py::arg("n"), py::arg("k"), "Success probability after k search iterations.");

  m.def("aqc_schedule", &fisher::aqc_schedule, py::arg("n"), py::arg("tau"),
        "Optimal adiabatic interpolation schedule x(tau) for an n-item search.");

  // ---- ray speed vs energy dispersion ------------------------------------
  m.def(
      "speed_dispersion_pair",
      [](int dim, std::uint64_t seed, double hbar) {
        SplitMix64 rng(seed);
        const hilbert::Hamiltonian h(hilbert::random_hermitian(dim, rng), hbar);
        const hilbert::StateVector psi = hilbert::random_state(dim, rng);
        return hilbert::speed_equals_dispersion_check(h, psi);
      },
      py::arg("dim"), py::arg("seed"), py::arg("hbar") = 1.0,
      "Draw a random Hamiltonian/state pair and return (ray speed, "
      "energy dispersion / hbar); the two are equal.");

  // ---- interior fluid sphere ----------------------------------------------
  m.def(
      "gr_sho_frequency",
      [](double rho, double newton_g, double light_speed, double radius) {
        return models::gr_sho_frequency(
            models::FluidSphereModel(rho, newton_g, light_speed, radius));
      },
      py::arg("rho"), py::arg("newton_g"), py::arg("light_speed"), py::arg("radius"),
      "Central-oscillation angular frequency sqrt(4 pi G rho / 3).");

  m.def(
      "surface_matching_defect",
      [](double rho, double newton_g, double light_speed, double radius) {
        return models::surface_matching_defect(
            models::FluidSphereModel(rho, newton_g, light_speed, radius));
      },
      py::arg("rho"), py::arg("newton_g"), py::arg("light_speed"), py::arg("radius"),
      "Interior/exterior metric mismatch at the sphere surface (zero up to roundoff).");

  m.def(
      "radial_oscillation",
      [](double xi_a, double xi0, double t_end, double h) {
        const models::RadialOscillation osc = models::simulate_radial_oscillation(
            models::FluidSphereModel::geometric(xi_a), xi0, t_end, h);
        py::dict out;
        out["fitted_frequency"] = osc.fitted_frequency;
        out["crossings"] = osc.crossings;
        out["samples"] = osc.t.size();
        return out;
      },
      py::arg("xi_a") = 0.03, py::arg("xi0") = 1e-3, py::arg("t_end") = 60.0,
      py::arg("h") = 1e-3,
      "Integrate a radial oscillation of the geometric-units fluid sphere and "
      "fit its frequency (newtonian reference is 1).");

  // ---- adiabatic gas oscillator -------------------------------------------
  m.def(
      "ruchhardt_frequency",
      [](double pressure, double volume, double area, double mass, double gamma) {
        return models::ruchhardt_frequency(
            models::RuchhardtModel(pressure, volume, area, mass, gamma));
      },
      py::arg("pressure"), py::arg("volume"), py::arg("area"), py::arg("mass"),
      py::arg("gamma"), "Adiabatic oscillation frequency sqrt(P0 A^2 gamma / (m V0)).");

  m.def(
      "gamma_from_period",
      [](double pressure, double volume, double area, double mass, double period) {
        // The inversion only uses (P0, V0, A, m); the model's own gamma is a
        // construction placeholder.
        return models::gamma_from_period(
            models::RuchhardtModel(pressure, volume, area, mass, 1.4), period);
      },
      py::arg("pressure"), py::arg("volume"), py::arg("area"), py::arg("mass"),
      py::arg("period"), "Invert a measured oscillation period to the adiabatic index.");

  // ---- jacobi-metric trajectories ------------------------------------------
  m.def(
      "jacobi_newton_deviation",
      [](double mass, double omega, double amplitude, double phi0, double h) {
        models::JacobiSystem sys;
        sys.dim = 1;
        sys.mass = mass;
        sys.energy = 0.5 * mass * omega * omega * amplitude * amplitude;
        sys.potential = [=](const rvec& q) {
          return 0.5 * mass * omega * omega * q[0] * q[0];
        };
        sys.gradient = [=](const rvec& q) { return rvec{mass * omega * omega * q[0]}; };
        const double t_turn = (0.5 * pi - phi0) / omega;
        const models::TimedTrajectory traj = models::jacobi_geodesic_to_newton(
            sys, rvec{amplitude * std::sin(phi0)}, rvec{1.0}, 0.8 * t_turn, h);
        double worst = 0.0;
        for (std::size_t k = 0; k < traj.t.size(); ++k)
          worst = std::max(worst, std::abs(traj.q[k][0] -
                                           amplitude * std::sin(omega * traj.t[k] + phi0)));
        return worst;
      },
      py::arg("mass") = 1.0, py::arg("omega") = 1.0, py::arg("amplitude") = 1.0,
      py::arg("phi0") = 0.0, py::arg("h") = 5e-4,
      "Worst deviation between the Jacobi-metric geodesic (remapped to "
      "physical time) and the Newtonian oscillator over a pre-turning window.");

  // ---- experiment runner -----------------------------------------------------
  m.def(
      "list_experiments",
      [] {
        py::list out;
        for (const auto& info : runner::list_experiments())
          out.append(py::make_tuple(info.name, info.description));
        return out;
      },
      "Available experiments as (name, description) tuples.");

  m.def(
      "run_config",
      [](const std::string& json_text) {
        return records_to_list(runner::run_experiment(runner::parse_config_text(json_text)));
      },
      py::arg("json_text"),
      "Parse a JSON config document and run the experiment it names; returns "
      "the result records as dicts.");

  m.def(
      "selftest",
      [](std::uint64_t seed) { return records_to_list(runner::run_selftest(seed)); },
      py::arg("seed") = 0, "Run every experiment with default parameters.");

  m.def(
      "selftest_csv",
      [](std::uint64_t seed) { return runner::render_csv(runner::run_selftest(seed)); },
      py::arg("seed") = 0,
      "CSV text of a full selftest; byte-identical for identical seeds.");
}
