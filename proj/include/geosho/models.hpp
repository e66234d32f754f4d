#pragma once

// Gravitational and thermal systems whose small oscillations realize the
// same simple harmonic motion as the quantum geodesics.
//
// Fluid sphere (interior Schwarzschild / Tolman solution for constant
// density rho, radius a):
//   ds^2 = g00(r) c^2-free form:  g00 = (1/4) c^2 [3 cos xi_a - cos xi]^2,
//   g_rr = -1/cos^2 xi,  with  sin xi = r/R,  R = c sqrt(3/(8 pi G rho)).
// A radial geodesic released near the center oscillates with angular
// frequency  v_GR = sqrt(4 pi G rho / 3)  in the small-amplitude,
// small-sphere limit.  Using the Killing-time conservation E = g00 tdot,
// the 2D geodesic reduces to one ODE in xi(t):
//   xi'' = -A'(xi)/(2 R^2) + (A'/A) xi'^2,   A = g00.
// That reduced ODE is the primary integration path; the full 2D
// affine-parameter integration is kept as a cross-check.
//
// Ruechhardt's experiment (Ruechhardt, Physik. Z. 30, 58 (1929)): a ball of
// mass m oscillating in the neck (cross-section A) of a vessel of volume V0
// holding gas at pressure P0 undergoes adiabatic oscillations with
//   v_th = sqrt(P0 A^2 gamma / (m V0)),
// the standard classroom route to the adiabatic index gamma.
//
// Jacobi/Maupertuis geometry: for H = p^2/(2m) + V(q) at energy E the paths
// are geodesics of  g_ab = 2 m [E - V(q)] delta_ab, and the arc length is
// related to physical time by  ds = 2 T dt  with T = E - V on shell.
// Integrating the geodesic and remapping time must reproduce Newton's
// m q'' = -grad V.

#include <functional>
#include <string>
#include <vector>

#include "geosho/geodesic.hpp"
#include "geosho/linalg.hpp"

namespace geosho::models {

struct FluidSphereModel {
  FluidSphereModel(double rho, double newton_g, double light_speed, double radius);

  // Geometric-units instance: G = c = 1, rho = 3/(4 pi) so that
  // v_GR = sqrt(4 pi G rho/3) = 1, with the sphere size set by xi_a.
  static FluidSphereModel geometric(double xi_a = 0.03);

  double rho;  // uniform density
  double G;    // Newton constant
  double c;    // speed of light
  double a;    // sphere radius (must satisfy a < R and cos xi_a > 1/3)

  double R() const;     // curvature scale c sqrt(3/(8 pi G rho))
  double xi_a() const;  // asin(a/R)
  double mass() const;  // (4/3) pi rho a^3

  double g00(double r) const;  // time-time metric component (includes c^2)
};

// 2D (t, r) chart of the interior solution, signature (+, -), with analytic
// derivatives.  Valid for |r| < R (the chart covers a diameter so radial
// oscillations can pass through the center); |r| >= R raises DomainError,
// |r| > a additionally leaves the physical sphere (checked by callers that
// care; the vacuum exterior is out of scope).
geodesic::MetricField interior_metric(const FluidSphereModel& model);

// sqrt(4 pi G rho / 3).
double gr_sho_frequency(const FluidSphereModel& model);

// |g00(a)/c^2 - (1 - 2 G M/(a c^2))|: interior/exterior matching at the
// surface, identically zero up to roundoff.
double surface_matching_defect(const FluidSphereModel& model);

struct RadialOscillation {
  rvec t;
  rvec xi;      // angular radius coordinate, sin xi = r/R
  rvec xi_dot;  // empty for the affine cross-check path
  double fitted_frequency = 0.0;
  int crossings = 0;
};

// Release from rest at xi0 (0 < xi0 <= 1e-2 enforced) and integrate the
// reduced ODE in coordinate time with fixed-step RK4.  The amplitude must
// stay inside the sphere: |xi| >= xi_a raises DomainError.  The frequency
// is fitted from zero crossings of the centered signal.
RadialOscillation simulate_radial_oscillation(const FluidSphereModel& model, double xi0,
                                              double t_end, double h);

// Cross-check: the same oscillation via the full 2D affine-parameter
// geodesic of interior_metric (h is the affine step; samples land on a
// smooth non-uniform t grid).
RadialOscillation radial_oscillation_via_geodesic(const FluidSphereModel& model, double xi0,
                                                  double t_end, double h);

struct RuchhardtModel {
  RuchhardtModel(double pressure, double volume, double area, double ball_mass, double gamma);

  double P0;     // equilibrium gas pressure
  double V0;     // vessel volume
  double A;      // tube cross-section
  double m;      // oscillating mass
  double gamma;  // adiabatic index (> 1)
};

double ruchhardt_frequency(const RuchhardtModel& model);  // sqrt(P0 A^2 gamma/(m V0))
double ruchhardt_period(const RuchhardtModel& model);     // 2 pi / frequency

// Invert the period measurement: gamma = (2 pi / T)^2 m V0 / (P0 A^2).
double gamma_from_period(const RuchhardtModel& model, double period);

struct JacobiSystem {
  int dim = 1;
  double energy = 0.0;
  double mass = 1.0;
  std::function<double(const rvec&)> potential;
  std::function<rvec(const rvec&)> gradient;  // analytic grad V
};

// g_ab = 2 m [E - V(q)] delta_ab with analytic derivatives; evaluating at
// E - V <= 0 raises DomainError (past the turning surface).
geodesic::MetricField jacobi_metric(const JacobiSystem& system);

struct TimedTrajectory {
  enum class End {
    reached_t_end,   // covered the requested time window
    turning_point,   // stopped at the E - V threshold
    arc_exhausted,   // internal arc budget ran out first (diagnostic case)
  };

  rvec t;
  std::vector<rvec> q;
  std::vector<rvec> qdot;  // dq/dt
  End end = End::reached_t_end;
  std::string diagnostic;
};

// Integrate the Jacobi geodesic in arc length (unit g-speed, so s is arc
// length), accumulate physical time through dt = ds/(2[E - V]) as a
// fourth-order quadrature, and return the time-parametrized trajectory.
// q0 must have E - V(q0) > 0; direction sets the initial motion (its norm
// is ignored, the energy fixes |qdot|).  h is the target time step near
// q0 (the arc step is h * 2[E - V(q0)]).  Integration ends at t_end or at
// the turning threshold E - V < 1e-9 |E|, whichever comes first.
TimedTrajectory jacobi_geodesic_to_newton(const JacobiSystem& system, const rvec& q0,
                                          const rvec& direction, double t_end, double h);

// Closed-form oscillator x(t) = cos(w t) x0 + sin(w t)/w v0.
double newton_sho_solution(double x0, double v0, double omega, double t);

// The linearized piston as a 1D Jacobi system: V(q) = (1/2) m v_th^2 q^2
// at the energy of oscillation amplitude q_max.
JacobiSystem ruchhardt_jacobi_system(const RuchhardtModel& model, double amplitude);

}  // namespace geosho::models
