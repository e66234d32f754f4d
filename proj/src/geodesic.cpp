#include "geosho/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace geosho::geodesic {

MetricField::MetricField(int dim, Field g, Signature signature, DerivativeField dg)
    : dim_(dim), g_(std::move(g)), signature_(signature), dg_(std::move(dg)) {
  if (dim_ < 1) throw ContractError("MetricField: dimension must be >= 1");
  if (!g_) throw ContractError("MetricField: metric closure required");
}

SquareMatrix MetricField::metric(const rvec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw ContractError("MetricField: point has wrong dimension");
  SquareMatrix g = g_(x);
  if (g.n != dim_) throw ContractError("MetricField: closure returned wrong dimension");
  if (g.max_asymmetry() > 1e-13)
    throw ContractError("MetricField: metric asymmetry " +
                        std::to_string(g.max_asymmetry()) + " exceeds 1e-13");
  return g;
}

std::vector<SquareMatrix> MetricField::metric_derivatives(const rvec& x) const {
  if (dg_) {
    std::vector<SquareMatrix> d = dg_(x);
    if (static_cast<int>(d.size()) != dim_)
      throw ContractError("MetricField: derivative closure returned wrong count");
    return d;
  }
  std::vector<SquareMatrix> d;
  d.reserve(static_cast<std::size_t>(dim_));
  rvec probe = x;
  for (int c = 0; c < dim_; ++c) {
    const double h = 1e-6 * std::max(1.0, std::abs(x[static_cast<std::size_t>(c)]));
    probe[static_cast<std::size_t>(c)] = x[static_cast<std::size_t>(c)] + h;
    SquareMatrix plus = metric(probe);
    probe[static_cast<std::size_t>(c)] = x[static_cast<std::size_t>(c)] - h;
    const SquareMatrix minus = metric(probe);
    probe[static_cast<std::size_t>(c)] = x[static_cast<std::size_t>(c)];
    for (std::size_t i = 0; i < plus.a.size(); ++i)
      plus.a[i] = (plus.a[i] - minus.a[i]) / (2.0 * h);
    d.push_back(std::move(plus));
  }
  return d;
}

MetricField MetricField::euclidean(int dim) {
  return MetricField(
      dim, [dim](const rvec&) { return SquareMatrix::identity(dim); },
      Signature::riemannian,
      [dim](const rvec&) {
        return std::vector<SquareMatrix>(static_cast<std::size_t>(dim), SquareMatrix(dim));
      });
}

Christoffel christoffel(const MetricField& metric, const rvec& x) {
  const int n = metric.dim();
  SquareMatrix g = metric.metric(x);
  SquareMatrix ginv;
  try {
    ginv = inverse(g);
  } catch (const SingularMetricError& e) {
    std::string where = "(";
    for (std::size_t i = 0; i < x.size(); ++i)
      where += (i ? ", " : "") + std::to_string(x[i]);
    throw SingularMetricError(std::string(e.what()) + " at x = " + where + ")");
  }
  const std::vector<SquareMatrix> dg = metric.metric_derivatives(x);

  Christoffel gamma(static_cast<std::size_t>(n),
                    std::vector<rvec>(static_cast<std::size_t>(n),
                                      rvec(static_cast<std::size_t>(n), 0.0)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = b; c < n; ++c) {
        double s = 0.0;
        for (int m = 0; m < n; ++m)
          s += ginv(a, m) * (dg[static_cast<std::size_t>(b)](c, m) +
                             dg[static_cast<std::size_t>(c)](m, b) -
                             dg[static_cast<std::size_t>(m)](b, c));
        const double value = 0.5 * s;
        // One computation for (b, c) and its mirror keeps the lower-index
        // symmetry exact to the bit.
        gamma[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] = value;
        gamma[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)][static_cast<std::size_t>(b)] = value;
      }
    }
  }
  return gamma;
}

double norm_invariant(const MetricField& metric, const rvec& x, const rvec& v) {
  const SquareMatrix g = metric.metric(x);
  double s = 0.0;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      s += g(a, b) * v[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)];
  return s;
}

namespace {

// Internal sentinel: a step whose norm drift stayed above tolerance at the
// maximum halving depth.
struct DriftFailure {
  double drift;
  double h;
};

struct Phase {
  rvec x, v, q;  // position, velocity, accumulated quadratures
};

struct Slope {
  rvec dx, dv, dq;
};

struct StepResult {
  Phase y;
  double advanced = 0.0;  // parameter distance actually covered
  bool stopped = false;   // stop predicate fired on a committed (sub)step
};

Slope rhs(const MetricField& metric, const IntegrationOptions& opt, const rvec& x,
          const rvec& v) {
  const std::size_t n = x.size();
  Slope out;
  out.dx = v;
  out.dv.assign(n, 0.0);
  const Christoffel gamma = christoffel(metric, x);
  for (std::size_t a = 0; a < n; ++a) {
    double acc = 0.0;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        acc += gamma[a][b][c] * v[b] * v[c];
    out.dv[a] = -acc;
  }
  out.dq.resize(opt.quadratures.size());
  for (std::size_t j = 0; j < opt.quadratures.size(); ++j)
    out.dq[j] = opt.quadratures[j](x, v);
  return out;
}

Phase rk4_step(const MetricField& metric, const IntegrationOptions& opt, const Phase& y,
               double h) {
  auto blend = [](const rvec& base, const rvec& slope, double w) {
    rvec out(base);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += w * slope[i];
    return out;
  };

  const Slope k1 = rhs(metric, opt, y.x, y.v);
  const Slope k2 = rhs(metric, opt, blend(y.x, k1.dx, 0.5 * h), blend(y.v, k1.dv, 0.5 * h));
  const Slope k3 = rhs(metric, opt, blend(y.x, k2.dx, 0.5 * h), blend(y.v, k2.dv, 0.5 * h));
  const Slope k4 = rhs(metric, opt, blend(y.x, k3.dx, h), blend(y.v, k3.dv, h));

  Phase out = y;
  for (std::size_t i = 0; i < y.x.size(); ++i) {
    out.x[i] += h / 6.0 * (k1.dx[i] + 2.0 * k2.dx[i] + 2.0 * k3.dx[i] + k4.dx[i]);
    out.v[i] += h / 6.0 * (k1.dv[i] + 2.0 * k2.dv[i] + 2.0 * k3.dv[i] + k4.dv[i]);
  }
  for (std::size_t j = 0; j < y.q.size(); ++j)
    out.q[j] += h / 6.0 * (k1.dq[j] + 2.0 * k2.dq[j] + 2.0 * k3.dq[j] + k4.dq[j]);
  return out;
}

// One step of size h, re-done as two half steps (bounded depth) when the
// norm invariant drifts too much or when an RK4 stage leaves the chart.
// The stop predicate is checked after every committed substep so that
// trajectories can terminate cleanly arbitrarily close to a chart boundary
// (e.g. a turning surface where the metric degenerates).
StepResult advance(const MetricField& metric, const IntegrationOptions& opt, const Phase& y,
                   double h, int depth) {
  bool must_split = false;
  Phase candidate;
  try {
    const double before = norm_invariant(metric, y.x, y.v);
    candidate = rk4_step(metric, opt, y, h);
    const double drift = std::abs(norm_invariant(metric, candidate.x, candidate.v) - before);
    if (drift > opt.drift_tolerance) {
      if (depth >= opt.max_step_halvings) throw DriftFailure{drift, h};
      must_split = true;
    }
  } catch (const DriftFailure&) {
    throw;
  } catch (...) {
    // Singular metric / chart exit inside a stage: retry with smaller
    // steps; at maximum depth report the underlying failure.
    if (depth >= opt.max_step_halvings) throw;
    must_split = true;
  }

  if (!must_split) {
    const bool fired = opt.stop && opt.stop(candidate.x, candidate.v, candidate.q);
    return {std::move(candidate), h, fired};
  }

  StepResult first = advance(metric, opt, y, 0.5 * h, depth + 1);
  if (first.stopped) return first;
  StepResult second = advance(metric, opt, first.y, 0.5 * h, depth + 1);
  second.advanced += first.advanced;
  return second;
}

}  // namespace

GeodesicTrajectory integrate_affine_geodesic(const MetricField& metric, rvec x0, rvec v0,
                                             const IntegrationOptions& options) {
  if (static_cast<int>(x0.size()) != metric.dim() || x0.size() != v0.size())
    throw ContractError("integrate_affine_geodesic: x0/v0 must match the metric dimension");
  if (!(options.h > 0.0) || !(options.s_end > 0.0))
    throw ContractError("integrate_affine_geodesic: h and s_end must be positive");

  GeodesicTrajectory traj;
  traj.affine = true;

  Phase y{std::move(x0), std::move(v0), rvec(options.quadratures.size(), 0.0)};
  // First evaluation outside the loop: unusable initial data should throw
  // to the caller rather than come back as a truncated trajectory.
  (void)norm_invariant(metric, y.x, y.v);
  (void)christoffel(metric, y.x);

  double s = 0.0;
  traj.s.push_back(s);
  traj.x.push_back(y.x);
  traj.v.push_back(y.v);
  traj.quadratures.push_back(y.q);

  if (options.stop && options.stop(y.x, y.v, y.q)) {
    traj.status = GeodesicTrajectory::Status::stopped;
    return traj;
  }

  const long n_steps = std::max<long>(
      1, static_cast<long>(std::ceil(options.s_end / options.h - 1e-9)));
  for (long k = 0; k < n_steps; ++k) {
    const double target = std::min(options.s_end, static_cast<double>(k + 1) * options.h);
    StepResult r;
    try {
      r = advance(metric, options, y, target - s, 0);
    } catch (const DriftFailure& f) {
      traj.status = GeodesicTrajectory::Status::truncated_drift;
      traj.diagnostic = "norm drift " + std::to_string(f.drift) + " above tolerance " +
                        std::to_string(options.drift_tolerance) + " at s = " +
                        std::to_string(s) + " with step " + std::to_string(f.h) +
                        " after " + std::to_string(options.max_step_halvings) + " halvings";
      return traj;
    } catch (const SingularMetricError& e) {
      traj.status = GeodesicTrajectory::Status::truncated_singular;
      traj.diagnostic = std::string("metric singular near s = ") + std::to_string(s) +
                        ": " + e.what();
      return traj;
    } catch (const DomainError& e) {
      traj.status = GeodesicTrajectory::Status::truncated_singular;
      traj.diagnostic = std::string("left the chart near s = ") + std::to_string(s) + ": " +
                        e.what();
      return traj;
    }
    y = std::move(r.y);
    s += r.advanced;
    traj.s.push_back(s);
    traj.x.push_back(y.x);
    traj.v.push_back(y.v);
    traj.quadratures.push_back(y.q);
    if (r.stopped) {
      traj.status = GeodesicTrajectory::Status::stopped;
      return traj;
    }
  }
  traj.status = GeodesicTrajectory::Status::completed;
  return traj;
}

ResidualSamples nonaffine_residual(const GeodesicTrajectory& trajectory,
                                   const MetricField& metric,
                                   const std::function<double(double)>& g_of_s) {
  if (trajectory.size() < 3)
    throw ContractError("nonaffine_residual: need at least 3 samples");
  const std::size_t dim = trajectory.x.front().size();

  ResidualSamples out;
  for (std::size_t k = 1; k + 1 < trajectory.size(); ++k) {
    const double h1 = trajectory.s[k] - trajectory.s[k - 1];
    const double h2 = trajectory.s[k + 1] - trajectory.s[k];
    if (!(h1 > 0.0) || !(h2 > 0.0))
      throw ContractError("nonaffine_residual: parameter grid must be strictly increasing");

    rvec xdot(dim), xddot(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      xdot[a] = fd_first(h1, h2, trajectory.x[k - 1][a], trajectory.x[k][a],
                         trajectory.x[k + 1][a]);
      xddot[a] = fd_second(h1, h2, trajectory.x[k - 1][a], trajectory.x[k][a],
                           trajectory.x[k + 1][a]);
    }

    const Christoffel gamma = christoffel(metric, trajectory.x[k]);
    const double gs = g_of_s ? g_of_s(trajectory.s[k]) : 0.0;
    rvec res(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      double acc = xddot[a] - gs * xdot[a];
      for (std::size_t b = 0; b < dim; ++b)
        for (std::size_t c = 0; c < dim; ++c)
          acc += gamma[a][b][c] * xdot[b] * xdot[c];
      res[a] = acc;
      out.max_abs = std::max(out.max_abs, std::abs(acc));
    }
    out.s.push_back(trajectory.s[k]);
    out.residual.push_back(std::move(res));
  }
  return out;
}

GeodesicTrajectory reparametrize_to_affine(const GeodesicTrajectory& trajectory,
                                           const rvec& lambda_samples) {
  if (lambda_samples.size() != trajectory.size())
    throw ContractError("reparametrize_to_affine: lambda samples must match the grid");
  if (trajectory.size() < 2)
    throw ContractError("reparametrize_to_affine: need at least 2 samples");
  for (double l : lambda_samples)
    if (!(l > 0.0))
      throw ContractError("reparametrize_to_affine: lambda must be strictly positive");

  rvec integrand(lambda_samples.size());
  for (std::size_t i = 0; i < lambda_samples.size(); ++i) integrand[i] = 1.0 / lambda_samples[i];

  GeodesicTrajectory out = trajectory;
  out.s = cumulative_trapezoid_nonuniform(trajectory.s, integrand);
  for (std::size_t i = 0; i < out.v.size(); ++i)
    for (double& comp : out.v[i]) comp *= lambda_samples[i];
  out.affine = true;
  return out;
}

}  // namespace geosho::geodesic
