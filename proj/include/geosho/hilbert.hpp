#pragma once

// Geometry of quantum state space (projective Hilbert space).
//
// Conventions:
//   * <a|b> is antilinear in the first slot.
//   * The Fubini-Study line element gives the speed of the projected curve
//       v = || |psi_dot> - <psi|psi_dot>|psi> ||,
//     i.e. the norm of the horizontal (gauge-fixed) part of |psi_dot>.
//   * For Schrodinger evolution this speed equals the energy dispersion
//     over hbar, v = dE/hbar with dE^2 = <H^2> - <H>^2 (Anandan & Aharonov,
//     Phys. Rev. Lett. 65, 1697 (1990)).
//   * A horizontal geodesic with speed v is the great-circle arc
//       |psi(s)> = cos(v s)|psi0> + sin(v s)/v |psi_dot0>,
//     valid when <psi0|psi_dot0> = 0 and ||psi_dot0|| = v.
//   * Phases follow Mukunda-Simon/Berry:  total = arg<psi(0)|psi(T)>,
//     dynamical = -(1/hbar) Int <psi|H|psi> dt, geometric = total - dynamical.
//     Reported phases are reduced to (-pi, pi] with the winding recorded.

#include <functional>
#include <utility>
#include <vector>

#include "geosho/linalg.hpp"
#include "geosho/numerics.hpp"

namespace geosho::hilbert {

// Unit-norm complex vector; normalization is validated at construction
// (|| |psi>|| - 1| <= 1e-12) so downstream code can assume it.
class StateVector {
 public:
  explicit StateVector(cvec amplitudes);

  // Rescales to unit norm; throws on (near-)zero input.
  static StateVector normalized(cvec amplitudes);

  int dim() const { return static_cast<int>(amp_.size()); }
  const cvec& amplitudes() const { return amp_; }
  const cdouble& operator[](int i) const { return amp_[static_cast<std::size_t>(i)]; }

 private:
  cvec amp_;
};

// Hermitian observable plus the hbar scale used wherever H generates time
// evolution.  Hermiticity is validated at construction (defect <= 1e-12).
class Hamiltonian {
 public:
  explicit Hamiltonian(ComplexMatrix h, double hbar = 1.0);

  int dim() const { return h_.n; }
  double hbar() const { return hbar_; }
  const ComplexMatrix& matrix() const { return h_; }

  cvec apply(const cvec& psi) const { return h_.apply(psi); }
  double expectation(const StateVector& psi) const;

  // -(i/hbar) H |psi>, the Schrodinger velocity of |psi>.
  cvec schrodinger_rate(const StateVector& psi) const;

 private:
  ComplexMatrix h_;
  double hbar_;
};

struct PhaseDecomposition {
  double total = 0.0;      // arg<psi(0)|psi(T)>, principal value in (-pi, pi]
  double dynamical = 0.0;  // -(1/hbar) Int <psi|H|psi> dt, not reduced
  double geometric = 0.0;  // total - dynamical, reduced to (-pi, pi]
  long long winding = 0;   // geometric + 2*pi*winding == total - dynamical
};

// Fubini-Study speed of the ray: norm of the horizontal part of psi_dot.
double fubini_study_speed(const StateVector& psi, const cvec& psi_dot);

// dE = sqrt(<H^2> - <H>^2).  A variance in [-1e-12, 0) from roundoff is
// clamped to zero; anything more negative raises InternalError.
double energy_dispersion(const Hamiltonian& h, const StateVector& psi);

// Returns {fubini_study_speed under Schrodinger flow, dE/hbar}; the two are
// equal identically, so the pair is a cheap cross-check of both code paths.
std::pair<double, double> speed_equals_dispersion_check(const Hamiltonian& h,
                                                        const StateVector& psi);

// Great-circle geodesic through (psi0, psi_dot0) at parameter s.  Contract:
// <psi0|psi_dot0> = 0 and ||psi_dot0||^2 = v^2, both within 1e-10, v > 0.
StateVector horizontal_geodesic(const StateVector& psi0, const cvec& psi_dot0,
                                double v, double s);

// |<b|a>|^2.
double transition_probability(const StateVector& a, const StateVector& b);

// Unit-speed geodesic arc from ray a (s = 0) to ray b (s = theta), where
// theta = arccos|<a|b>| and beta = arg<a|b>:
//   |psi(s)> ~ e^{i beta s/theta} [ sin(theta-s)|a> + e^{-i beta} sin(s)|b> ],
// renormalized sample by sample.  Orthogonal endpoints take the beta = 0,
// theta = pi/2 branch.  theta = 0 (same ray) raises DomainError.
StateVector geodesic_arc_between(const StateVector& a, const StateVector& b, double s);
double arc_angle_between(const StateVector& a, const StateVector& b);  // theta above

// Phase decomposition of a trajectory sampled on a uniform time grid with
// spacing dt (>= 3 samples).  The time-indexed overload takes one
// Hamiltonian per sample (all sharing the same hbar); the other assumes a
// constant Hamiltonian.  |<psi(0)|psi(T)>| <= 1e-12 raises DomainError
// (total phase undefined).
PhaseDecomposition phase_decomposition(const std::vector<StateVector>& trajectory,
                                       const std::vector<Hamiltonian>& h_of_t, double dt);
PhaseDecomposition phase_decomposition(const std::vector<StateVector>& trajectory,
                                       const Hamiltonian& h, double dt);

// Gauge-invariant geometric phase of a ray trajectory, computed without any
// Hamiltonian:  arg<psi(0)|psi(T)> - Im Int <psi|psi_dot> dt  with
// fourth-order central-difference psi_dot in the interior (second-order
// near the ends) and trapezoid quadrature.  Returned unreduced; compare
// mod 2*pi.
double berry_phase(const std::vector<StateVector>& trajectory, double dt);

// A-posteriori trapezoid truncation estimate for the Im<psi|psi_dot>
// integral of berry_phase: (h/12) * sum |second difference of integrand|.
double berry_phase_truncation_estimate(const std::vector<StateVector>& trajectory, double dt);

// max_k |<psi_k|psi_dot_k>| over interior samples, psi_dot by central
// differences on the parameter grid with spacing h.
double horizontality_defect(const std::vector<StateVector>& trajectory, double h);

// Multiplies sample k by exp[+(i/hbar) Int_0^{t_k} <psi|H|psi> dt'] (cumulative
// trapezoid), removing the dynamical phase.
std::vector<StateVector> horizontal_lift(const std::vector<StateVector>& trajectory,
                                         const std::vector<Hamiltonian>& h_of_t, double dt);
std::vector<StateVector> horizontal_lift(const std::vector<StateVector>& trajectory,
                                         const Hamiltonian& h, double dt);

// max_k || D^2_s psi + v^2 psi ||_inf over interior samples of a uniformly
// sampled trajectory: the simple-harmonic-oscillator residual of a
// horizontal geodesic (second derivative by central differences).
double sho_residual_max(const std::vector<StateVector>& trajectory, double v, double h);

// Deterministic random inputs for property tests and seeded sweeps.
ComplexMatrix random_hermitian(int dim, SplitMix64& rng);
StateVector random_state(int dim, SplitMix64& rng);

}  // namespace geosho::hilbert
