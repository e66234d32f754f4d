#pragma once

// Metric geodesics in low-dimensional charts.
//
//   Gamma^a_bc = (1/2) g^{am} (d_b g_cm + d_c g_mb - d_m g_bc)
//
// Affine geodesics solve  x_ddot^a + Gamma^a_bc x_dot^b x_dot^c = 0; a
// non-affinely parametrized geodesic instead satisfies
//   x_ddot^a + Gamma^a_bc x_dot^b x_dot^c = g(s) x_dot^a
// for some scalar g(s), and the substitution s = sigma(tau) with
// dsigma/dtau = lambda(sigma(tau)) restores the affine form.
//
// Integration is classical fixed-step RK4.  Each step is validated against
// the conserved norm g_ab v^a v^b; a step whose drift exceeds the
// tolerance is re-done as two half steps (recursively, bounded depth).
// Metric singularities or chart exits truncate the trajectory and record a
// diagnostic instead of aborting the run.

#include <functional>
#include <string>
#include <vector>

#include "geosho/linalg.hpp"
#include "geosho/numerics.hpp"

namespace geosho::geodesic {

class MetricField {
 public:
  enum class Signature { riemannian, lorentzian };

  using Field = std::function<SquareMatrix(const rvec&)>;
  // Derivative closure: component c of the result is the matrix d_c g.
  using DerivativeField = std::function<std::vector<SquareMatrix>(const rvec&)>;

  MetricField(int dim, Field g, Signature signature,
              DerivativeField dg = nullptr);

  int dim() const { return dim_; }
  Signature signature() const { return signature_; }
  bool has_analytic_derivatives() const { return static_cast<bool>(dg_); }

  // Symmetry-checked evaluation (asymmetry <= 1e-13 enforced).
  SquareMatrix metric(const rvec& x) const;

  // Analytic derivatives when attached, otherwise central differences with
  // per-coordinate step 1e-6 * max(1, |x_c|).
  std::vector<SquareMatrix> metric_derivatives(const rvec& x) const;

  static MetricField euclidean(int dim);

 private:
  int dim_;
  Field g_;
  Signature signature_;
  DerivativeField dg_;
};

// Gamma[a][b][c], exactly symmetric in (b, c) by construction.
using Christoffel = std::vector<std::vector<rvec>>;

Christoffel christoffel(const MetricField& metric, const rvec& x);

struct GeodesicTrajectory {
  enum class Status {
    completed,           // reached s_end
    stopped,             // stop predicate fired
    truncated_singular,  // metric singular / left the chart
    truncated_drift,     // norm drift persisted at maximum step halving
  };

  rvec s;                           // parameter samples
  std::vector<rvec> x;              // positions
  std::vector<rvec> v;              // dx/ds
  std::vector<rvec> quadratures;    // accumulated auxiliary integrals per sample
  Status status = Status::completed;
  std::string diagnostic;           // set when truncated
  bool affine = true;               // parametrization tag

  std::size_t size() const { return s.size(); }
};

struct IntegrationOptions {
  double s_end = 1.0;
  double h = 1e-3;
  double drift_tolerance = 1e-6;  // per-step |delta(g_ab v^a v^b)| rejection threshold
  int max_step_halvings = 20;
  // Auxiliary integrands dq_j/ds = f_j(x, v), advanced inside the RK4 stages.
  std::vector<std::function<double(const rvec&, const rvec&)>> quadratures;
  // Early-stop predicate, checked after every recorded sample.
  std::function<bool(const rvec& x, const rvec& v, const rvec& quads)> stop;
};

GeodesicTrajectory integrate_affine_geodesic(const MetricField& metric, rvec x0, rvec v0,
                                             const IntegrationOptions& options);

// g_ab v^a v^b at a point; the conserved quantity monitored per step.
double norm_invariant(const MetricField& metric, const rvec& x, const rvec& v);

// Residual of the non-affine geodesic equation on a sampled trajectory,
// evaluated at interior samples with three-point stencils (valid on
// uniform or smoothly varying monotone grids):
//   r^a_k = x_ddot^a + Gamma^a_bc x_dot^b x_dot^c - g(s_k) x_dot^a.
// Pass g_of_s = nullptr (or an always-zero function) for the affine check.
struct ResidualSamples {
  rvec s;
  std::vector<rvec> residual;
  double max_abs = 0.0;
};

ResidualSamples nonaffine_residual(const GeodesicTrajectory& trajectory,
                                   const MetricField& metric,
                                   const std::function<double(double)>& g_of_s);

// Rescale a non-affinely parametrized trajectory to the affine parameter:
// tau_i = Int_0^{s_i} ds'/lambda(s') (cumulative trapezoid on the sample
// grid) and velocities dx/dtau = lambda * dx/ds.  lambda_samples must be
// strictly positive and match the trajectory grid.  The output keeps the
// (now smoothly non-uniform) image grid tau_i.
GeodesicTrajectory reparametrize_to_affine(const GeodesicTrajectory& trajectory,
                                           const rvec& lambda_samples);

}  // namespace geosho::geodesic
