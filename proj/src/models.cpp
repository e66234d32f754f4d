#include "geosho/models.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "geosho/numerics.hpp"

namespace geosho::models {

FluidSphereModel::FluidSphereModel(double rho_, double newton_g, double light_speed,
                                   double radius)
    : rho(rho_), G(newton_g), c(light_speed), a(radius) {
  if (!(rho > 0.0) || !(G > 0.0) || !(c > 0.0) || !(a > 0.0))
    throw ContractError("FluidSphereModel: rho, G, c, a must all be positive");
  if (!(a < R()))
    throw ContractError("FluidSphereModel: a = " + std::to_string(a) +
                        " must be below the curvature scale R = " + std::to_string(R()));
  // g00 > 0 everywhere inside requires 3 cos xi_a > cos xi for all |xi| <=
  // xi_a, i.e. 3 cos xi_a > 1 (the constant-density horizon-avoidance bound).
  if (!(3.0 * std::cos(xi_a()) > 1.0))
    throw ContractError("FluidSphereModel: sphere too compact (3 cos xi_a <= 1), "
                        "g00 would vanish inside");
}

FluidSphereModel FluidSphereModel::geometric(double xi_a) {
  if (!(xi_a > 0.0) || !(xi_a < pi / 2.0))
    throw ContractError("FluidSphereModel::geometric: need 0 < xi_a < pi/2");
  const double rho = 3.0 / (4.0 * pi);  // makes v_GR = sqrt(4 pi G rho/3) = 1
  const double R = std::sqrt(3.0 / (8.0 * pi * rho));
  return FluidSphereModel(rho, 1.0, 1.0, R * std::sin(xi_a));
}

double FluidSphereModel::R() const { return c * std::sqrt(3.0 / (8.0 * pi * G * rho)); }

double FluidSphereModel::xi_a() const { return std::asin(a / R()); }

double FluidSphereModel::mass() const { return 4.0 / 3.0 * pi * rho * a * a * a; }

double FluidSphereModel::g00(double r) const {
  const double Rv = R();
  if (std::abs(r) >= Rv)
    throw DomainError("FluidSphereModel: |r| = " + std::to_string(std::abs(r)) +
                      " outside the chart (R = " + std::to_string(Rv) + ")");
  const double xi = std::asin(r / Rv);
  const double f = 3.0 * std::cos(xi_a()) - std::cos(xi);
  return 0.25 * c * c * f * f;
}

geodesic::MetricField interior_metric(const FluidSphereModel& model) {
  const double R = model.R();
  const double k = std::cos(model.xi_a());
  const double c2 = model.c * model.c;

  auto field = [R, k, c2](const rvec& x) {
    const double r = x[1];
    if (std::abs(r) >= R)
      throw DomainError("interior_metric: |r| = " + std::to_string(std::abs(r)) +
                        " outside the chart (R = " + std::to_string(R) + ")");
    const double xi = std::asin(r / R);
    const double cosxi = std::cos(xi);
    const double f = 3.0 * k - cosxi;
    SquareMatrix g(2);
    g(0, 0) = 0.25 * c2 * f * f;
    g(1, 1) = -1.0 / (cosxi * cosxi);
    return g;
  };

  auto derivatives = [R, k, c2](const rvec& x) {
    const double r = x[1];
    if (std::abs(r) >= R)
      throw DomainError("interior_metric: |r| = " + std::to_string(std::abs(r)) +
                        " outside the chart (R = " + std::to_string(R) + ")");
    const double xi = std::asin(r / R);
    const double cosxi = std::cos(xi);
    const double sinxi = std::sin(xi);
    const double f = 3.0 * k - cosxi;
    std::vector<SquareMatrix> d(2, SquareMatrix(2));
    // d/dt vanishes (static metric); d/dr via dxi/dr = 1/(R cos xi).
    d[1](0, 0) = 0.5 * c2 * f * sinxi / (R * cosxi);
    d[1](1, 1) = -2.0 * sinxi / (R * cosxi * cosxi * cosxi * cosxi);
    return d;
  };

  return geodesic::MetricField(2, field, geodesic::MetricField::Signature::lorentzian,
                               derivatives);
}

double gr_sho_frequency(const FluidSphereModel& model) {
  return std::sqrt(4.0 * pi * model.G * model.rho / 3.0);
}

double surface_matching_defect(const FluidSphereModel& model) {
  const double interior = model.g00(model.a) / (model.c * model.c);
  const double exterior =
      1.0 - 2.0 * model.G * model.mass() / (model.a * model.c * model.c);
  return std::abs(interior - exterior);
}

namespace {

// Right-hand side of the reduced radial equation (coordinate time):
//   xi'' = -A'/(2 R^2) + (A'/A) xi'^2,  A(xi) = (c^2/4)(3 k - cos xi)^2.
struct ReducedRadial {
  double R, k, c2;

  void operator()(double xi, double u, double& dxi, double& du) const {
    const double f = 3.0 * k - std::cos(xi);
    const double A = 0.25 * c2 * f * f;
    const double Aprime = 0.5 * c2 * f * std::sin(xi);
    dxi = u;
    du = -Aprime / (2.0 * R * R) + (Aprime / A) * u * u;
  }
};

}  // namespace

RadialOscillation simulate_radial_oscillation(const FluidSphereModel& model, double xi0,
                                              double t_end, double h) {
  if (!(xi0 > 0.0) || xi0 > 1e-2)
    throw ContractError("simulate_radial_oscillation: need 0 < xi0 <= 1e-2 "
                        "(small-oscillation regime)");
  if (!(t_end > 0.0) || !(h > 0.0))
    throw ContractError("simulate_radial_oscillation: t_end and h must be positive");
  const double xi_a = model.xi_a();
  if (xi0 >= xi_a)
    throw DomainError("simulate_radial_oscillation: amplitude xi0 = " + std::to_string(xi0) +
                      " reaches the surface (xi_a = " + std::to_string(xi_a) + ")");

  const ReducedRadial rhs{model.R(), std::cos(xi_a), model.c * model.c};
  const long n = std::max<long>(2, std::llround(t_end / h));

  RadialOscillation out;
  out.t.reserve(static_cast<std::size_t>(n) + 1);
  out.xi.reserve(static_cast<std::size_t>(n) + 1);
  out.xi_dot.reserve(static_cast<std::size_t>(n) + 1);

  double xi = xi0, u = 0.0;
  out.t.push_back(0.0);
  out.xi.push_back(xi);
  out.xi_dot.push_back(u);

  for (long i = 0; i < n; ++i) {
    double k1x, k1u, k2x, k2u, k3x, k3u, k4x, k4u;
    rhs(xi, u, k1x, k1u);
    rhs(xi + 0.5 * h * k1x, u + 0.5 * h * k1u, k2x, k2u);
    rhs(xi + 0.5 * h * k2x, u + 0.5 * h * k2u, k3x, k3u);
    rhs(xi + h * k3x, u + h * k3u, k4x, k4u);
    xi += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    if (std::abs(xi) >= xi_a)
      throw DomainError("simulate_radial_oscillation: |xi| = " + std::to_string(std::abs(xi)) +
                        " left the small-oscillation regime (xi_a = " +
                        std::to_string(xi_a) + ") at t = " +
                        std::to_string(static_cast<double>(i + 1) * h));
    out.t.push_back(static_cast<double>(i + 1) * h);
    out.xi.push_back(xi);
    out.xi_dot.push_back(u);
  }

  const FrequencyFit fit = zero_crossing_frequency(out.t, out.xi);
  out.fitted_frequency = fit.omega;
  out.crossings = fit.crossings;
  return out;
}

RadialOscillation radial_oscillation_via_geodesic(const FluidSphereModel& model, double xi0,
                                                  double t_end, double h) {
  if (!(xi0 > 0.0) || xi0 > 1e-2)
    throw ContractError("radial_oscillation_via_geodesic: need 0 < xi0 <= 1e-2");
  if (!(t_end > 0.0) || !(h > 0.0))
    throw ContractError("radial_oscillation_via_geodesic: t_end and h must be positive");

  const geodesic::MetricField metric = interior_metric(model);
  const double R = model.R();
  const double r0 = R * std::sin(xi0);
  const double tdot0 = 1.0 / std::sqrt(model.g00(r0));  // timelike normalization

  geodesic::IntegrationOptions opt;
  opt.h = h;
  // Proper time runs slower than coordinate time inside (g00 <= c^2), so
  // this arc budget always outlasts the stop predicate below.
  opt.s_end = 2.0 * t_end * std::max(1.0, std::sqrt(model.g00(0.0)));
  opt.stop = [t_end](const rvec& x, const rvec&, const rvec&) { return x[0] >= t_end; };

  const geodesic::GeodesicTrajectory traj =
      integrate_affine_geodesic(metric, {0.0, r0}, {tdot0, 0.0}, opt);
  if (traj.status == geodesic::GeodesicTrajectory::Status::truncated_singular ||
      traj.status == geodesic::GeodesicTrajectory::Status::truncated_drift)
    throw DomainError("radial_oscillation_via_geodesic: integration truncated: " +
                      traj.diagnostic);

  RadialOscillation out;
  out.t.reserve(traj.size());
  out.xi.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    out.t.push_back(traj.x[i][0]);
    out.xi.push_back(std::asin(traj.x[i][1] / R));
  }
  const FrequencyFit fit = zero_crossing_frequency(out.t, out.xi);
  out.fitted_frequency = fit.omega;
  out.crossings = fit.crossings;
  return out;
}

RuchhardtModel::RuchhardtModel(double pressure, double volume, double area, double ball_mass,
                               double gamma_)
    : P0(pressure), V0(volume), A(area), m(ball_mass), gamma(gamma_) {
  if (!(P0 > 0.0) || !(V0 > 0.0) || !(A > 0.0) || !(m > 0.0))
    throw ContractError("RuchhardtModel: P0, V0, A, m must all be positive");
  if (!(gamma > 1.0))
    throw ContractError("RuchhardtModel: gamma must exceed 1 (adiabatic index)");
}

double ruchhardt_frequency(const RuchhardtModel& model) {
  return std::sqrt(model.P0 * model.A * model.A * model.gamma / (model.m * model.V0));
}

double ruchhardt_period(const RuchhardtModel& model) {
  return 2.0 * pi / ruchhardt_frequency(model);
}

double gamma_from_period(const RuchhardtModel& model, double period) {
  if (!(period > 0.0)) throw ContractError("gamma_from_period: period must be positive");
  const double w = 2.0 * pi / period;
  return w * w * model.m * model.V0 / (model.P0 * model.A * model.A);
}

geodesic::MetricField jacobi_metric(const JacobiSystem& system) {
  if (system.dim < 1) throw ContractError("jacobi_metric: dimension must be >= 1");
  if (!(system.mass > 0.0)) throw ContractError("jacobi_metric: mass must be positive");
  if (!system.potential || !system.gradient)
    throw ContractError("jacobi_metric: potential and gradient closures required");

  const int dim = system.dim;
  const double m = system.mass, E = system.energy;
  auto V = system.potential;
  auto gradV = system.gradient;

  auto field = [dim, m, E, V](const rvec& q) {
    const double T = E - V(q);
    if (!(T > 0.0))
      throw DomainError("jacobi_metric: E - V = " + std::to_string(T) +
                        " <= 0 (outside the classically allowed region)");
    SquareMatrix g(dim);
    for (int i = 0; i < dim; ++i) g(i, i) = 2.0 * m * T;
    return g;
  };
  auto derivatives = [dim, m, gradV](const rvec& q) {
    const rvec grad = gradV(q);
    std::vector<SquareMatrix> d(static_cast<std::size_t>(dim), SquareMatrix(dim));
    for (int c = 0; c < dim; ++c)
      for (int i = 0; i < dim; ++i)
        d[static_cast<std::size_t>(c)](i, i) = -2.0 * m * grad[static_cast<std::size_t>(c)];
    return d;
  };
  return geodesic::MetricField(dim, field, geodesic::MetricField::Signature::riemannian,
                               derivatives);
}

TimedTrajectory jacobi_geodesic_to_newton(const JacobiSystem& system, const rvec& q0,
                                          const rvec& direction, double t_end, double h) {
  if (q0.size() != static_cast<std::size_t>(system.dim) || direction.size() != q0.size())
    throw ContractError("jacobi_geodesic_to_newton: q0/direction must match the system dim");
  if (!(t_end > 0.0) || !(h > 0.0))
    throw ContractError("jacobi_geodesic_to_newton: t_end and h must be positive");

  const double T0 = system.energy - system.potential(q0);
  if (!(T0 > 0.0))
    throw DomainError("jacobi_geodesic_to_newton: E - V(q0) = " + std::to_string(T0) +
                      " must be positive");
  double dn = 0.0;
  for (double d : direction) dn += d * d;
  dn = std::sqrt(dn);
  if (!(dn > 0.0))
    throw ContractError("jacobi_geodesic_to_newton: direction must be nonzero");

  // Unit g-speed: 2 m T |dq/ds|^2 = 1.
  const double speed = 1.0 / std::sqrt(2.0 * system.mass * T0);
  rvec v0(direction);
  for (double& d : v0) d *= speed / dn;

  const geodesic::MetricField metric = jacobi_metric(system);
  const double E = system.energy;
  auto V = system.potential;
  const double turning_threshold = 1e-9 * std::max(std::abs(E), T0);

  geodesic::IntegrationOptions opt;
  opt.h = h * 2.0 * T0;  // make the local time step near q0 come out as h
  opt.s_end = 4.0 * std::max(std::abs(E), T0) * t_end + 10.0 * opt.h;
  opt.max_step_halvings = 48;  // resolves the geometry right up to the turning surface
  opt.quadratures.push_back(
      [E, V](const rvec& x, const rvec&) { return 0.5 / (E - V(x)); });
  opt.stop = [E, V, turning_threshold, t_end](const rvec& x, const rvec&, const rvec& quads) {
    return (E - V(x)) < turning_threshold || quads[0] >= t_end;
  };

  const geodesic::GeodesicTrajectory traj = integrate_affine_geodesic(metric, q0, v0, opt);

  TimedTrajectory out;
  out.t.reserve(traj.size());
  out.q.reserve(traj.size());
  out.qdot.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double T = E - V(traj.x[i]);
    out.t.push_back(traj.quadratures[i][0]);
    out.q.push_back(traj.x[i]);
    rvec qd(traj.v[i]);
    for (double& c : qd) c *= 2.0 * T;  // dq/dt = (ds/dt) dq/ds = 2 T dq/ds
    out.qdot.push_back(std::move(qd));
  }

  switch (traj.status) {
    case geodesic::GeodesicTrajectory::Status::stopped:
      out.end = (E - V(traj.x.back())) < turning_threshold * (1.0 + 1e-9)
                    ? TimedTrajectory::End::turning_point
                    : TimedTrajectory::End::reached_t_end;
      break;
    case geodesic::GeodesicTrajectory::Status::completed:
      out.end = TimedTrajectory::End::arc_exhausted;
      out.diagnostic = "arc budget exhausted before t_end or a turning point";
      break;
    default:
      // The halving cascade could not land inside the allowed region: the
      // trajectory ends as close to the turning surface as representable.
      out.end = TimedTrajectory::End::turning_point;
      out.diagnostic = traj.diagnostic;
      break;
  }
  return out;
}

double newton_sho_solution(double x0, double v0, double omega, double t) {
  if (!(omega > 0.0)) throw ContractError("newton_sho_solution: omega must be positive");
  return std::cos(omega * t) * x0 + std::sin(omega * t) / omega * v0;
}

JacobiSystem ruchhardt_jacobi_system(const RuchhardtModel& model, double amplitude) {
  if (!(amplitude > 0.0))
    throw ContractError("ruchhardt_jacobi_system: amplitude must be positive");
  const double w = ruchhardt_frequency(model);
  const double m = model.m;
  JacobiSystem sys;
  sys.dim = 1;
  sys.mass = m;
  sys.energy = 0.5 * m * w * w * amplitude * amplitude;
  sys.potential = [m, w](const rvec& q) { return 0.5 * m * w * w * q[0] * q[0]; };
  sys.gradient = [m, w](const rvec& q) { return rvec{m * w * w * q[0]}; };
  return sys;
}

}  // namespace geosho::models
