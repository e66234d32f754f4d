#pragma once

// Grover dynamics on an unstructured database of N items (Grover, Phys.
// Rev. Lett. 79, 325 (1997)) and the probability-space view of the same
// rotation.
//
// The search rotation lives in the plane spanned by the marked state |w>
// and the uniform superposition of the rest |w_perp>.  With
// sin(phi/2) = 1/sqrt(N), k iterations take the start state to
//   amplitude on |w>      :  sin((k + 1/2) phi)
//   amplitude on |w_perp> :  cos((k + 1/2) phi).
//
// The continuous-angle interpolation of that rotation is the "Groverian
// path" of output distributions
//   p_w(theta) = sin^2(theta),  p_l(theta) = cos^2(theta)/(N-1)  (l != w),
// whose classical Fisher information F(theta) = 4 sum_m (d q_m/d theta)^2,
// q_m = sqrt(p_m), is constant and equal to 4 (Braunstein & Caves, Phys.
// Rev. Lett. 72, 3439 (1994) fixes the F = 4 (ds/dtheta)^2 convention).

#include <functional>
#include <optional>

#include "geosho/hilbert.hpp"
#include "geosho/linalg.hpp"

namespace geosho::grover {

// Search instance: database size n >= 2 and the marked item as a 1-based
// index (matching how items are usually labelled in worked examples).
struct GroverProblem {
  GroverProblem(long n_items, long target_one_based);

  long n;       // database size
  long target;  // 1-based marked index
  double phi;   // rotation angle per iteration, 2*asin(1/sqrt(n)), in (0, pi]
};

// Amplitudes after k iterations in the (|w>, |w_perp>) plane.
struct PlaneState {
  double target_amplitude;    // sin((k + 1/2) phi)
  double residual_amplitude;  // cos((k + 1/2) phi)
};

PlaneState grover_state(const GroverProblem& problem, long iterations);

// Full n-dimensional state after k iterations, computed matrix-free: the
// oracle is a sign flip on the target entry and the diffusion operator is
// the rank-one reflection 2|s><s| - 1 (uniform |s>), applied with
// compensated summation.  n is capped at 16384; beyond that a
// ResourceLimitError is raised.
hilbert::StateVector grover_state_matrix(const GroverProblem& problem, long iterations);

inline constexpr long kMatrixSimulationCap = 16384;

struct OptimalIterations {
  long k_exact;                // round(pi/(2 phi) - 1/2), never negative
  double k_asymptotic;         // (pi/4) sqrt(n)
  double success_probability;  // sin^2((k_exact + 1/2) phi)
};

OptimalIterations optimal_iterations(const GroverProblem& problem);

// One-parameter family of output distributions.  The primary data is a
// smooth signed amplitude view q(theta) with p = q^2 elementwise; keeping
// q smooth (rather than sqrt(p) >= 0) is what lets finite differences work
// across p = 0.  Normalization sum_m p_m = 1 is enforced (1e-12) at every
// evaluation.
class ProbabilityPath {
 public:
  using Closure = std::function<rvec(double)>;

  static ProbabilityPath from_amplitudes(int dim, Closure amplitudes,
                                         Closure amplitude_rates = nullptr);
  // q = sqrt(p); raises InvalidPathError if any p_m < 0 at a probe point.
  static ProbabilityPath from_probabilities(int dim, Closure probabilities);

  int dim() const { return dim_; }
  bool has_analytic_rates() const { return static_cast<bool>(rates_); }

  rvec amplitudes(double theta) const;        // normalization-checked
  rvec probabilities(double theta) const;     // p = q^2
  rvec amplitude_rates(double theta) const;   // analytic only; throws if absent

 private:
  ProbabilityPath(int dim, Closure q, Closure qdot) : dim_(dim), q_(std::move(q)), rates_(std::move(qdot)) {}

  int dim_;
  Closure q_;
  Closure rates_;
};

// The Groverian path for database size n (see header comment).
ProbabilityPath groverian_path(long n);

enum class FisherMode {
  analytic,           // 4 sum q_dot^2 from the path's analytic rates
  finite_difference,  // central differences on q with step 1e-5
};

double fisher_information(const ProbabilityPath& path, double theta,
                          FisherMode mode = FisherMode::analytic);

inline constexpr double kFisherFdStep = 1e-5;

}  // namespace geosho::grover
