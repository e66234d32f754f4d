#include "geosho/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace geosho::hilbert {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-12;
constexpr double kContractTol = 1e-10;

void require_same_dim(const StateVector& psi, const cvec& other, const char* who) {
  if (static_cast<std::size_t>(psi.dim()) != other.size())
    throw ContractError(std::string(who) + ": dimension mismatch");
}

}  // namespace

StateVector::StateVector(cvec amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() < 2) throw ContractError("StateVector: dimension must be >= 2");
  const double n = norm(amp_);
  if (std::abs(n - 1.0) > kNormTol)
    throw ContractError("StateVector: not unit norm (|norm - 1| = " +
                        std::to_string(std::abs(n - 1.0)) + ")");
}

StateVector StateVector::normalized(cvec amplitudes) {
  const double n = norm(amplitudes);
  if (n < 1e-300) throw ContractError("StateVector::normalized: zero vector");
  for (cdouble& z : amplitudes) z /= n;
  return StateVector(std::move(amplitudes));
}

Hamiltonian::Hamiltonian(ComplexMatrix h, double hbar) : h_(std::move(h)), hbar_(hbar) {
  if (h_.n < 2) throw ContractError("Hamiltonian: dimension must be >= 2");
  if (!(hbar_ > 0.0)) throw ContractError("Hamiltonian: hbar must be positive");
  const double defect = h_.hermiticity_defect();
  if (defect > kHermTol)
    throw ContractError("Hamiltonian: not Hermitian (defect = " + std::to_string(defect) + ")");
}

double Hamiltonian::expectation(const StateVector& psi) const {
  if (psi.dim() != h_.n) throw ContractError("Hamiltonian::expectation: dimension mismatch");
  return inner(psi.amplitudes(), h_.apply(psi.amplitudes())).real();
}

cvec Hamiltonian::schrodinger_rate(const StateVector& psi) const {
  if (psi.dim() != h_.n) throw ContractError("Hamiltonian::schrodinger_rate: dimension mismatch");
  cvec hpsi = h_.apply(psi.amplitudes());
  const cdouble factor(0.0, -1.0 / hbar_);
  for (cdouble& z : hpsi) z *= factor;
  return hpsi;
}

double fubini_study_speed(const StateVector& psi, const cvec& psi_dot) {
  require_same_dim(psi, psi_dot, "fubini_study_speed");
  const cdouble overlap = inner(psi.amplitudes(), psi_dot);
  // Horizontal part of psi_dot: subtract the component along |psi>.
  double s = 0.0;
  for (std::size_t i = 0; i < psi_dot.size(); ++i)
    s += std::norm(psi_dot[i] - overlap * psi.amplitudes()[i]);
  return std::sqrt(s);
}

double energy_dispersion(const Hamiltonian& h, const StateVector& psi) {
  if (psi.dim() != h.dim()) throw ContractError("energy_dispersion: dimension mismatch");
  const cvec hpsi = h.apply(psi.amplitudes());
  const double mean = inner(psi.amplitudes(), hpsi).real();
  double second = 0.0;  // <H^2> = ||H psi||^2 for Hermitian H
  for (const cdouble& z : hpsi) second += std::norm(z);
  double variance = second - mean * mean;
  if (variance < 0.0) {
    if (variance < -1e-12)
      throw InternalError("energy_dispersion: variance " + std::to_string(variance) +
                          " below the roundoff floor");
    variance = 0.0;
  }
  return std::sqrt(variance);
}

std::pair<double, double> speed_equals_dispersion_check(const Hamiltonian& h,
                                                        const StateVector& psi) {
  return {fubini_study_speed(psi, h.schrodinger_rate(psi)),
          energy_dispersion(h, psi) / h.hbar()};
}

StateVector horizontal_geodesic(const StateVector& psi0, const cvec& psi_dot0,
                                double v, double s) {
  require_same_dim(psi0, psi_dot0, "horizontal_geodesic");
  if (!(v > 0.0)) throw ContractError("horizontal_geodesic: speed v must be positive");

  std::string violations;
  const double overlap = std::abs(inner(psi0.amplitudes(), psi_dot0));
  if (overlap > kContractTol)
    violations += " |<psi0|psi_dot0>| = " + std::to_string(overlap) + " (want 0);";
  const double speed2 = [&] {
    double acc = 0.0;
    for (const cdouble& z : psi_dot0) acc += std::norm(z);
    return acc;
  }();
  if (std::abs(speed2 - v * v) > kContractTol)
    violations += " ||psi_dot0||^2 - v^2 = " + std::to_string(speed2 - v * v) + " (want 0);";
  if (!violations.empty())
    throw ContractError("horizontal_geodesic: initial data violates the horizontal "
                        "contract:" + violations);

  cvec out(psi0.amplitudes());
  const double c = std::cos(v * s), k = std::sin(v * s) / v;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = c * out[i] + k * psi_dot0[i];
  // cos/sin keep the norm to roundoff; renormalize so the result is a
  // valid StateVector regardless of |s|.
  return StateVector::normalized(std::move(out));
}

double transition_probability(const StateVector& a, const StateVector& b) {
  return std::norm(inner(b.amplitudes(), a.amplitudes()));
}

double arc_angle_between(const StateVector& a, const StateVector& b) {
  double mod = std::abs(inner(a.amplitudes(), b.amplitudes()));
  mod = std::min(mod, 1.0);
  return std::acos(mod);
}

StateVector geodesic_arc_between(const StateVector& a, const StateVector& b, double s) {
  if (a.dim() != b.dim()) throw ContractError("geodesic_arc_between: dimension mismatch");
  const cdouble ov = inner(a.amplitudes(), b.amplitudes());
  const double mod = std::min(std::abs(ov), 1.0);
  const double theta = std::acos(mod);
  if (theta < 1e-9)
    throw DomainError("geodesic_arc_between: endpoints lie on the same ray (theta = " +
                      std::to_string(theta) + "); arc direction undefined");
  // Orthogonal endpoints: beta is undefined, take the beta = 0 branch.
  const double beta = (mod < 1e-15) ? 0.0 : std::arg(ov);

  const cdouble head = std::polar(1.0, beta * s / theta);
  const cdouble btwist = std::polar(1.0, -beta);
  const double sa = std::sin(theta - s), sb = std::sin(s);
  cvec out(a.amplitudes());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = head * (sa * out[i] + btwist * sb * b.amplitudes()[i]);
  return StateVector::normalized(std::move(out));
}

namespace {

PhaseDecomposition decompose(const std::vector<StateVector>& traj,
                             const rvec& energy_samples, double hbar, double dt) {
  const cdouble overlap =
      inner(traj.front().amplitudes(), traj.back().amplitudes());
  if (std::abs(overlap) <= 1e-12)
    throw DomainError("phase_decomposition: <psi(0)|psi(T)> vanishes; total phase undefined");

  PhaseDecomposition out;
  out.total = principal_angle(std::arg(overlap));
  out.dynamical = -trapezoid(energy_samples, dt) / hbar;
  const double raw = out.total - out.dynamical;
  out.geometric = principal_angle(raw);
  out.winding = winding_count(raw);
  return out;
}

void check_traj(const std::vector<StateVector>& traj, double dt, const char* who) {
  if (traj.size() < 3)
    throw ContractError(std::string(who) + ": need at least 3 samples");
  if (!(dt > 0.0)) throw ContractError(std::string(who) + ": dt must be positive");
}

}  // namespace

PhaseDecomposition phase_decomposition(const std::vector<StateVector>& trajectory,
                                       const std::vector<Hamiltonian>& h_of_t, double dt) {
  check_traj(trajectory, dt, "phase_decomposition");
  if (h_of_t.size() != trajectory.size())
    throw ContractError("phase_decomposition: one Hamiltonian per sample required");
  const double hbar = h_of_t.front().hbar();
  rvec energy(trajectory.size());
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    if (h_of_t[k].hbar() != hbar)
      throw ContractError("phase_decomposition: mixed hbar across samples");
    energy[k] = h_of_t[k].expectation(trajectory[k]);
  }
  return decompose(trajectory, energy, hbar, dt);
}

PhaseDecomposition phase_decomposition(const std::vector<StateVector>& trajectory,
                                       const Hamiltonian& h, double dt) {
  check_traj(trajectory, dt, "phase_decomposition");
  rvec energy(trajectory.size());
  for (std::size_t k = 0; k < trajectory.size(); ++k)
    energy[k] = h.expectation(trajectory[k]);
  return decompose(trajectory, energy, h.hbar(), dt);
}

namespace {

// Complex counterparts of the real stencils in numerics.hpp.
cdouble cforward_first(const cdouble& f0, const cdouble& f1, const cdouble& f2, double h) {
  return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * h);
}

cdouble ccentral_first(const cdouble& fm, const cdouble& fp, double h) {
  return (fp - fm) / (2.0 * h);
}

// Im<psi_k|psi_dot_k> for every sample.  The interior uses the five-point
// fourth-order stencil: a rapidly winding gauge factor e^{i alpha(t)} makes
// the second-order derivative error (dt^2/6) alpha_dot^3, which a trapezoid
// truncation estimate cannot see; at fourth order the quadrature truncation
// dominates again and the a-posteriori estimate below is meaningful.  The
// four samples nearest the ends fall back to second-order stencils (their
// trapezoid weight is O(dt), so the fallback contributes at the same order
// as the interior).
rvec connection_samples(const std::vector<StateVector>& traj, double dt) {
  const std::size_t n = traj.size();
  rvec g(n);
  auto im_overlap = [&](std::size_t k, const cvec& dot) {
    return inner(traj[k].amplitudes(), dot).imag();
  };
  for (std::size_t k = 0; k < n; ++k) {
    cvec dot(traj[k].amplitudes().size());
    if (k == 0) {
      for (std::size_t i = 0; i < dot.size(); ++i)
        dot[i] = cforward_first(traj[0][static_cast<int>(i)], traj[1][static_cast<int>(i)],
                                traj[2][static_cast<int>(i)], dt);
    } else if (k == n - 1) {
      for (std::size_t i = 0; i < dot.size(); ++i)
        dot[i] = -cforward_first(traj[n - 1][static_cast<int>(i)], traj[n - 2][static_cast<int>(i)],
                                 traj[n - 3][static_cast<int>(i)], dt);
    } else if (k >= 2 && k + 2 < n) {
      for (std::size_t i = 0; i < dot.size(); ++i) {
        const int c = static_cast<int>(i);
        dot[i] = (-traj[k + 2][c] + 8.0 * traj[k + 1][c] - 8.0 * traj[k - 1][c] +
                  traj[k - 2][c]) / (12.0 * dt);
      }
    } else {
      for (std::size_t i = 0; i < dot.size(); ++i)
        dot[i] = ccentral_first(traj[k - 1][static_cast<int>(i)], traj[k + 1][static_cast<int>(i)], dt);
    }
    g[k] = im_overlap(k, dot);
  }
  return g;
}

}  // namespace

double berry_phase(const std::vector<StateVector>& trajectory, double dt) {
  check_traj(trajectory, dt, "berry_phase");
  const cdouble overlap =
      inner(trajectory.front().amplitudes(), trajectory.back().amplitudes());
  if (std::abs(overlap) <= 1e-12)
    throw DomainError("berry_phase: <psi(0)|psi(T)> vanishes; phase undefined");
  const rvec g = connection_samples(trajectory, dt);
  return principal_angle(std::arg(overlap)) - trapezoid(g, dt);
}

double berry_phase_truncation_estimate(const std::vector<StateVector>& trajectory, double dt) {
  check_traj(trajectory, dt, "berry_phase_truncation_estimate");
  const rvec g = connection_samples(trajectory, dt);
  double acc = 0.0;
  for (std::size_t k = 1; k + 1 < g.size(); ++k)
    acc += std::abs(g[k - 1] - 2.0 * g[k] + g[k + 1]);
  return dt / 12.0 * acc;
}

double horizontality_defect(const std::vector<StateVector>& trajectory, double h) {
  check_traj(trajectory, h, "horizontality_defect");
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < trajectory.size(); ++k) {
    cvec dot(trajectory[k].amplitudes().size());
    for (std::size_t i = 0; i < dot.size(); ++i)
      dot[i] = (trajectory[k + 1][static_cast<int>(i)] -
                trajectory[k - 1][static_cast<int>(i)]) / (2.0 * h);
    worst = std::max(worst, std::abs(inner(trajectory[k].amplitudes(), dot)));
  }
  return worst;
}

namespace {

std::vector<StateVector> lift_with_energy(const std::vector<StateVector>& traj,
                                          const rvec& energy, double hbar, double dt) {
  const rvec accum = cumulative_trapezoid(energy, dt);
  std::vector<StateVector> out;
  out.reserve(traj.size());
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const cdouble phase = std::polar(1.0, accum[k] / hbar);
    out.push_back(StateVector::normalized(scaled(phase, traj[k].amplitudes())));
  }
  return out;
}

}  // namespace

std::vector<StateVector> horizontal_lift(const std::vector<StateVector>& trajectory,
                                         const std::vector<Hamiltonian>& h_of_t, double dt) {
  check_traj(trajectory, dt, "horizontal_lift");
  if (h_of_t.size() != trajectory.size())
    throw ContractError("horizontal_lift: one Hamiltonian per sample required");
  const double hbar = h_of_t.front().hbar();
  rvec energy(trajectory.size());
  for (std::size_t k = 0; k < trajectory.size(); ++k) {
    if (h_of_t[k].hbar() != hbar)
      throw ContractError("horizontal_lift: mixed hbar across samples");
    energy[k] = h_of_t[k].expectation(trajectory[k]);
  }
  return lift_with_energy(trajectory, energy, hbar, dt);
}

std::vector<StateVector> horizontal_lift(const std::vector<StateVector>& trajectory,
                                         const Hamiltonian& h, double dt) {
  check_traj(trajectory, dt, "horizontal_lift");
  rvec energy(trajectory.size());
  for (std::size_t k = 0; k < trajectory.size(); ++k)
    energy[k] = h.expectation(trajectory[k]);
  return lift_with_energy(trajectory, energy, h.hbar(), dt);
}

double sho_residual_max(const std::vector<StateVector>& trajectory, double v, double h) {
  check_traj(trajectory, h, "sho_residual_max");
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < trajectory.size(); ++k) {
    for (int i = 0; i < trajectory[k].dim(); ++i) {
      const cdouble second = (trajectory[k - 1][i] - 2.0 * trajectory[k][i] +
                              trajectory[k + 1][i]) / (h * h);
      worst = std::max(worst, std::abs(second + v * v * trajectory[k][i]));
    }
  }
  return worst;
}

ComplexMatrix random_hermitian(int dim, SplitMix64& rng) {
  if (dim < 2) throw ContractError("random_hermitian: dimension must be >= 2");
  ComplexMatrix h(dim);
  for (int i = 0; i < dim; ++i) {
    h(i, i) = rng.gaussian();
    for (int j = i + 1; j < dim; ++j) {
      const cdouble z(rng.gaussian() / std::sqrt(2.0), rng.gaussian() / std::sqrt(2.0));
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return h;
}

StateVector random_state(int dim, SplitMix64& rng) {
  if (dim < 2) throw ContractError("random_state: dimension must be >= 2");
  cvec v(static_cast<std::size_t>(dim));
  for (cdouble& z : v) z = cdouble(rng.gaussian(), rng.gaussian());
  return StateVector::normalized(std::move(v));
}

}  // namespace geosho::hilbert
