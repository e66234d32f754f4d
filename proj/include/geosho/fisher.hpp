#pragma once

// Geodesics of probability amplitudes under the classical Fisher-Rao
// metric, and the quantum (phase-aware) extension.
//
// Working in amplitude variables q_m = sqrt(p_m) turns the Fisher line
// element into a round-sphere one:  F(theta) = 4 sum_m q_dot_m^2, so the
// constrained length functional has density  L = sqrt(sum q_dot^2) =
// (1/2) sqrt(F), and extremal paths with constant F obey the oscillator
// equation
//   q_ddot_m - (1/2)(F_dot/F) q_dot_m + lambda sqrt(F) q_m = 0,
// which for the Groverian value F0 = 4 and multiplier lambda =
// sqrt(F0)/4 reduces to q_ddot + (F0/4) q = 0, i.e. angular frequency
// v = sqrt(F0)/2.
//
// With per-outcome phases phi_m attached, the relevant information is
//   F_q = (1/4) { sum_m p_dot_m^2 / p_m
//                 + 4 [ sum_m p_m phi_dot_m^2 - (sum_m p_m phi_dot_m)^2 ] }.
// The classical term is evaluated as sum q_dot_m^2 (identical where
// p_m > 0, and the correct limit 4 q_dot_m^2 / 4 where p_m = 0).

#include <functional>
#include <vector>

#include "geosho/linalg.hpp"
#include "geosho/numerics.hpp"

namespace geosho::fisher {

// L(q_dot) = sqrt(sum_m q_dot_m^2) = (1/2) sqrt(F).
double lagrangian_density(const rvec& q_dot);

// Euler-Lagrange residual of a sampled amplitude path on a uniform theta
// grid (spacing h, >= 5 samples):
//   r_m = q_ddot_m - (1/2)(F_dot/F) q_dot_m + lambda_fs sqrt(F) q_m
// evaluated at interior samples with central stencils.  fisher_samples
// must be positive everywhere they are probed (InvalidPathError otherwise).
struct ElResidual {
  rvec theta;                  // interior grid points
  std::vector<rvec> residual;  // one vector of components per grid point
  double max_abs = 0.0;
};

ElResidual el_residual(const std::vector<rvec>& q_samples, const rvec& fisher_samples,
                       double lambda_fs, double h, double theta0 = 0.0);

// Closed-form oscillator solution in amplitude space for constant Fisher
// information f0:  q(theta) = cos(v theta) q0 + sin(v theta)/v q_dot0,
// v = sqrt(f0)/2.
rvec sho_amplitude_solution(const rvec& q0, const rvec& q_dot0, double f0, double theta);

// Multiplier that tunes the constrained-length extremum to the Groverian
// oscillator: lambda_FS = sqrt(f0)/4.
double lagrange_multiplier_for_grover(double f0);

// Distribution with per-outcome phases.  Amplitudes are signed and smooth
// (p = q^2), phases are arbitrary smooth functions; rates may be supplied
// analytically, otherwise central differences with step 1e-6 are used.
class PhasedPath {
 public:
  using Closure = std::function<rvec(double)>;

  PhasedPath(int dim, Closure amplitudes, Closure phases,
             Closure amplitude_rates = nullptr, Closure phase_rates = nullptr);

  int dim() const { return dim_; }
  rvec amplitudes(double theta) const;
  rvec phases(double theta) const;
  rvec amplitude_rates(double theta) const;  // analytic or finite-difference
  rvec phase_rates(double theta) const;      // analytic or finite-difference

 private:
  rvec checked(const Closure& c, double theta, const char* what) const;

  int dim_;
  Closure q_, phi_, qdot_, phidot_;
};

inline constexpr double kPhasedFdStep = 1e-6;

// Quantum Fisher information of the phased path at theta (see header
// comment for the formula and the p = 0 regularization).
double quantum_fisher(const PhasedPath& path, double theta);

// Weighted phase-rate variance sum p phi_dot^2 - (sum p phi_dot)^2.
// Roundoff-negative values in [-1e-14, 0) are clamped to zero; more
// negative raises InternalError.
double phase_variance(const rvec& p, const rvec& phi_dot);

// Optimal adiabatic interpolation schedule for a search over n items:
//   x(tau) = 1/2 - tan((1 - 2 tau) arccos(1/sqrt(n))) / (2 sqrt(n-1)),
// monotone on tau in [0, 1] with x(0) = 0 and x(1) = 1.
double aqc_schedule(long n, double tau);

}  // namespace geosho::fisher
