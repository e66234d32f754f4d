#include "geosho/fisher.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace geosho::fisher {

double lagrangian_density(const rvec& q_dot) {
  double s = 0.0;
  for (double v : q_dot) s += v * v;
  return std::sqrt(s);
}

ElResidual el_residual(const std::vector<rvec>& q_samples, const rvec& fisher_samples,
                       double lambda_fs, double h, double theta0) {
  if (q_samples.size() < 5)
    throw ContractError("el_residual: need at least 5 samples for the stencils");
  if (fisher_samples.size() != q_samples.size())
    throw ContractError("el_residual: Fisher samples must match the q grid");
  if (!(h > 0.0)) throw ContractError("el_residual: h must be positive");
  const std::size_t dim = q_samples.front().size();
  for (const rvec& q : q_samples)
    if (q.size() != dim) throw ContractError("el_residual: ragged q samples");

  ElResidual out;
  for (std::size_t k = 1; k + 1 < q_samples.size(); ++k) {
    const double f = fisher_samples[k];
    if (!(f > 0.0))
      throw InvalidPathError("el_residual: F = " + std::to_string(f) +
                             " <= 0 at sample " + std::to_string(k));
    const double fdot = central_first(fisher_samples[k - 1], fisher_samples[k + 1], h);
    rvec res(dim);
    for (std::size_t m = 0; m < dim; ++m) {
      const double qdot = central_first(q_samples[k - 1][m], q_samples[k + 1][m], h);
      const double qddot =
          central_second(q_samples[k - 1][m], q_samples[k][m], q_samples[k + 1][m], h);
      res[m] = qddot - 0.5 * (fdot / f) * qdot + lambda_fs * std::sqrt(f) * q_samples[k][m];
      out.max_abs = std::max(out.max_abs, std::abs(res[m]));
    }
    out.theta.push_back(theta0 + static_cast<double>(k) * h);
    out.residual.push_back(std::move(res));
  }
  return out;
}

rvec sho_amplitude_solution(const rvec& q0, const rvec& q_dot0, double f0, double theta) {
  if (q0.size() != q_dot0.size())
    throw ContractError("sho_amplitude_solution: q0/q_dot0 dimension mismatch");
  if (!(f0 > 0.0)) throw ContractError("sho_amplitude_solution: need f0 > 0");
  const double v = std::sqrt(f0) / 2.0;
  const double c = std::cos(v * theta), s = std::sin(v * theta) / v;
  rvec out(q0.size());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = c * q0[m] + s * q_dot0[m];
  return out;
}

double lagrange_multiplier_for_grover(double f0) {
  if (!(f0 > 0.0)) throw ContractError("lagrange_multiplier_for_grover: need f0 > 0");
  return std::sqrt(f0) / 4.0;
}

PhasedPath::PhasedPath(int dim, Closure amplitudes, Closure phases,
                       Closure amplitude_rates, Closure phase_rates)
    : dim_(dim),
      q_(std::move(amplitudes)),
      phi_(std::move(phases)),
      qdot_(std::move(amplitude_rates)),
      phidot_(std::move(phase_rates)) {
  if (dim_ < 2) throw ContractError("PhasedPath: dimension must be >= 2");
  if (!q_ || !phi_) throw ContractError("PhasedPath: amplitude and phase closures required");
}

rvec PhasedPath::checked(const Closure& c, double theta, const char* what) const {
  rvec v = c(theta);
  if (static_cast<int>(v.size()) != dim_)
    throw ContractError(std::string("PhasedPath: ") + what + " closure returned wrong dimension");
  return v;
}

rvec PhasedPath::amplitudes(double theta) const {
  rvec q = checked(q_, theta, "amplitude");
  double total = 0.0;
  for (double v : q) total += v * v;
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidPathError("PhasedPath: sum p_m = " + std::to_string(total) +
                           " != 1 at theta = " + std::to_string(theta));
  return q;
}

rvec PhasedPath::phases(double theta) const { return checked(phi_, theta, "phase"); }

rvec PhasedPath::amplitude_rates(double theta) const {
  if (qdot_) return checked(qdot_, theta, "amplitude rate");
  const rvec plus = amplitudes(theta + kPhasedFdStep);
  const rvec minus = amplitudes(theta - kPhasedFdStep);
  rvec out(plus.size());
  for (std::size_t m = 0; m < out.size(); ++m)
    out[m] = central_first(minus[m], plus[m], kPhasedFdStep);
  return out;
}

rvec PhasedPath::phase_rates(double theta) const {
  if (phidot_) return checked(phidot_, theta, "phase rate");
  const rvec plus = phases(theta + kPhasedFdStep);
  const rvec minus = phases(theta - kPhasedFdStep);
  rvec out(plus.size());
  for (std::size_t m = 0; m < out.size(); ++m)
    out[m] = central_first(minus[m], plus[m], kPhasedFdStep);
  return out;
}

double phase_variance(const rvec& p, const rvec& phi_dot) {
  if (p.size() != phi_dot.size()) throw ContractError("phase_variance: dimension mismatch");
  double mean = 0.0, second = 0.0;
  for (std::size_t m = 0; m < p.size(); ++m) {
    mean += p[m] * phi_dot[m];
    second += p[m] * phi_dot[m] * phi_dot[m];
  }
  double var = second - mean * mean;
  if (var < 0.0) {
    if (var < -1e-14)
      throw InternalError("phase_variance: variance " + std::to_string(var) +
                          " below the roundoff floor");
    var = 0.0;
  }
  return var;
}

double quantum_fisher(const PhasedPath& path, double theta) {
  const rvec qdot = path.amplitude_rates(theta);
  const rvec p = [&] {
    rvec q = path.amplitudes(theta);
    for (double& v : q) v *= v;
    return q;
  }();
  const rvec phidot = path.phase_rates(theta);

  // (1/4) sum p_dot^2/p = sum q_dot^2, including the p = 0 limit.
  double classical = 0.0;
  for (double v : qdot) classical += v * v;
  return classical + phase_variance(p, phidot);
}

double aqc_schedule(long n, double tau) {
  if (n < 2) throw ContractError("aqc_schedule: need n >= 2");
  if (tau < 0.0 || tau > 1.0)
    throw DomainError("aqc_schedule: tau = " + std::to_string(tau) + " outside [0, 1]");
  const double xi = std::acos(1.0 / std::sqrt(static_cast<double>(n)));
  return 0.5 - std::tan((1.0 - 2.0 * tau) * xi) /
                   (2.0 * std::sqrt(static_cast<double>(n - 1)));
}

}  // namespace geosho::fisher
