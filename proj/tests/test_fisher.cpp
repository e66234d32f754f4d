#include <cmath>
#include <vector>

#include <doctest.h>

#include "geosho/errors.hpp"
#include "geosho/fisher.hpp"

using namespace geosho;
using namespace geosho::fisher;

TEST_CASE("lagrangian density is the euclidean amplitude speed") {
  CHECK(lagrangian_density(rvec{3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(lagrangian_density(rvec{0.0, 0.0}) == 0.0);
  // L = (1/2) sqrt(F) for the Groverian circle: speed 1 -> F = 4
  CHECK(2.0 * lagrangian_density(rvec{std::cos(0.3), -std::sin(0.3)}) ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("lagrange multiplier reproduces the oscillator frequency") {
  CHECK(lagrange_multiplier_for_grover(4.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lagrange_multiplier_for_grover(16.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(lagrange_multiplier_for_grover(0.0), ContractError);
}

TEST_CASE("closed-form amplitude oscillator") {
  const rvec q0{0.6, 0.8};
  const rvec qd0{-0.8, 0.6};
  const double f0 = 4.0;  // v = 1

  const rvec at0 = sho_amplitude_solution(q0, qd0, f0, 0.0);
  CHECK(at0[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(at0[1] == doctest::Approx(0.8).epsilon(1e-15));

  // derivative at 0 by central difference
  const double h = 1e-6;
  const rvec plus = sho_amplitude_solution(q0, qd0, f0, h);
  const rvec minus = sho_amplitude_solution(q0, qd0, f0, -h);
  CHECK((plus[0] - minus[0]) / (2.0 * h) == doctest::Approx(-0.8).epsilon(1e-9));
  CHECK((plus[1] - minus[1]) / (2.0 * h) == doctest::Approx(0.6).epsilon(1e-9));

  // period 2 pi / v, and frequency scales as sqrt(f0)/2
  const rvec full = sho_amplitude_solution(q0, qd0, f0, 2.0 * pi);
  CHECK(full[0] == doctest::Approx(0.6).epsilon(1e-12));
  const rvec quarter16 = sho_amplitude_solution(rvec{1.0, 0.0}, rvec{0.0, 0.0}, 16.0, pi / 2.0);
  CHECK(quarter16[0] == doctest::Approx(-1.0).epsilon(1e-12));  // v = 2: half period

  CHECK_THROWS_AS(sho_amplitude_solution(rvec{1.0}, rvec{0.0, 0.0}, 4.0, 0.1), ContractError);
  CHECK_THROWS_AS(sho_amplitude_solution(q0, qd0, -1.0, 0.1), ContractError);
}

TEST_CASE("euler-lagrange residual vanishes at second order on the oscillator") {
  const rvec q0{1.0, 0.0};
  const rvec qd0{0.0, 1.0};
  auto residual_at = [&](double h) {
    const int n = static_cast<int>(std::lround(1.0 / h)) + 1;
    std::vector<rvec> q;
    rvec f;
    for (int i = 0; i < n; ++i) {
      q.push_back(sho_amplitude_solution(q0, qd0, 4.0, i * h));
      f.push_back(4.0);
    }
    return el_residual(q, f, 0.5, h).max_abs;
  };
  const double r1 = residual_at(2e-3);
  const double r2 = residual_at(1e-3);
  CHECK(r2 < 1e-6);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.2));

  SUBCASE("interior grid bookkeeping") {
    std::vector<rvec> q;
    rvec f;
    const double h = 0.1;
    for (int i = 0; i < 7; ++i) {
      q.push_back(sho_amplitude_solution(q0, qd0, 4.0, 0.25 + i * h));
      f.push_back(4.0);
    }
    const ElResidual r = el_residual(q, f, 0.5, h, 0.25);
    CHECK(r.theta.size() == 5);  // endpoints dropped
    CHECK(r.theta.front() == doctest::Approx(0.35).epsilon(1e-14));
    CHECK(r.residual.size() == r.theta.size());
    CHECK(r.residual.front().size() == 2);
  }

  SUBCASE("a non-geodesic path leaves a visible residual") {
    // constant-speed but wrong multiplier: residual ~ |lambda' - lambda| * sqrt(F)
    const double h = 1e-3;
    std::vector<rvec> q;
    rvec f;
    for (int i = 0; i <= 1000; ++i) {
      q.push_back(sho_amplitude_solution(q0, qd0, 4.0, i * h));
      f.push_back(4.0);
    }
    CHECK(el_residual(q, f, 0.7, h).max_abs > 1e-2);
  }

  SUBCASE("contract checks") {
    std::vector<rvec> q(4, rvec{1.0, 0.0});
    rvec f(4, 4.0);
    CHECK_THROWS_AS(el_residual(q, f, 0.5, 1e-3), ContractError);        // < 5 samples
    std::vector<rvec> q5(5, rvec{1.0, 0.0});
    rvec f4(4, 4.0);
    CHECK_THROWS_AS(el_residual(q5, f4, 0.5, 1e-3), ContractError);      // length mismatch
    rvec f5(5, 4.0);
    CHECK_THROWS_AS(el_residual(q5, f5, 0.5, 0.0), ContractError);       // h = 0
    rvec fneg{4.0, 4.0, -1.0, 4.0, 4.0};
    CHECK_THROWS_AS(el_residual(q5, fneg, 0.5, 1e-3), InvalidPathError);
  }
}

TEST_CASE("phased path rate fallbacks agree with analytic rates") {
  auto q = [](double th) { return rvec{std::sin(th), std::cos(th)}; };
  auto qdot = [](double th) { return rvec{std::cos(th), -std::sin(th)}; };
  auto phi = [](double th) { return rvec{0.2 * th * th, -0.1 * th}; };
  auto phidot = [](double th) { return rvec{0.4 * th, -0.1}; };

  const PhasedPath analytic(2, q, phi, qdot, phidot);
  const PhasedPath numeric(2, q, phi);
  for (double th : {0.2, 0.9, 1.4}) {
    const rvec ra = analytic.amplitude_rates(th);
    const rvec rn = numeric.amplitude_rates(th);
    const rvec pa = analytic.phase_rates(th);
    const rvec pn = numeric.phase_rates(th);
    for (int m = 0; m < 2; ++m) {
      CHECK(std::abs(ra[static_cast<std::size_t>(m)] - rn[static_cast<std::size_t>(m)]) < 1e-9);
      CHECK(std::abs(pa[static_cast<std::size_t>(m)] - pn[static_cast<std::size_t>(m)]) < 1e-9);
    }
  }
  CHECK_THROWS_AS(PhasedPath(1, q, phi), ContractError);
  const PhasedPath bad_norm(2, [](double) { return rvec{1.0, 1.0}; }, phi);
  CHECK_THROWS_AS(bad_norm.amplitudes(0.1), InvalidPathError);
}

TEST_CASE("quantum fisher information") {
  auto q = [](double th) { return rvec{std::sin(th), std::cos(th)}; };
  auto qdot = [](double th) { return rvec{std::cos(th), -std::sin(th)}; };

  SUBCASE("flat phases reduce to the classical value") {
    auto zero = [](double) { return rvec{0.0, 0.0}; };
    const PhasedPath path(2, q, zero, qdot, zero);
    for (double th : {0.3, 0.8, 1.2})
      CHECK(quantum_fisher(path, th) == doctest::Approx(1.0).epsilon(1e-12));
    // p_1 = 0 at theta = 0 with q_dot_1 = 1: the amplitude form must not
    // divide by the vanishing probability
    CHECK(quantum_fisher(path, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("relative phase rates add their variance") {
    const double w = 1.7;
    const double r = 1.0 / std::sqrt(2.0);
    const PhasedPath path(
        2, [r](double) { return rvec{r, r}; },
        [w](double th) { return rvec{w * th, -w * th}; },
        [](double) { return rvec{0.0, 0.0}; },
        [w](double) { return rvec{w, -w}; });
    // classical term 0, variance w^2 - 0
    CHECK(quantum_fisher(path, 0.5) == doctest::Approx(w * w).epsilon(1e-12));
  }

  SUBCASE("a common phase drift is gauge and contributes nothing") {
    auto common = [](double th) { return rvec{0.3 * th, 0.3 * th}; };
    auto commondot = [](double) { return rvec{0.3, 0.3}; };
    const PhasedPath path(2, q, common, qdot, commondot);
    for (double th : {0.2, 0.9})
      CHECK(quantum_fisher(path, th) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("phase variance") {
  CHECK(phase_variance(rvec{0.3, 0.7}, rvec{2.0, -1.0}) == doctest::Approx(1.89).epsilon(1e-14));
  CHECK(phase_variance(rvec{0.5, 0.5}, rvec{1.0, 1.0}) == 0.0);  // clamped exact zero
  CHECK_THROWS_AS(phase_variance(rvec{1.0}, rvec{1.0, 2.0}), ContractError);
}

TEST_CASE("adiabatic schedule endpoints, midpoint, and monotonicity") {
  for (long n : {4L, 64L, 1024L}) {
    CHECK(std::abs(aqc_schedule(n, 0.0)) <= 1e-12);
    CHECK(std::abs(aqc_schedule(n, 0.5) - 0.5) <= 1e-12);
    CHECK(std::abs(aqc_schedule(n, 1.0) - 1.0) <= 1e-12);
    double prev = aqc_schedule(n, 0.0);
    for (int i = 1; i <= 200; ++i) {
      const double x = aqc_schedule(n, i / 200.0);
      CHECK(x > prev);
      prev = x;
    }
  }
  CHECK_THROWS_AS(aqc_schedule(1, 0.5), ContractError);
  CHECK_THROWS_AS(aqc_schedule(4, -0.1), DomainError);
  CHECK_THROWS_AS(aqc_schedule(4, 1.1), DomainError);
}
