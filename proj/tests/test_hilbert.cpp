#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "geosho/errors.hpp"
#include "geosho/hilbert.hpp"

using namespace geosho;
using namespace geosho::hilbert;

namespace {

// H = v * sigma_y: generates a real rotation (cos vt, sin vt) of e1, which
// is horizontal and has <H> = 0, dE = v.
Hamiltonian rotation_generator(double v, double hbar = 1.0) {
  ComplexMatrix h(2);
  h(0, 1) = cdouble(0.0, -v * hbar);
  h(1, 0) = cdouble(0.0, v * hbar);
  return Hamiltonian(h, hbar);
}

StateVector e1() { return StateVector(cvec{1.0, 0.0}); }

}  // namespace

TEST_CASE("state vector construction enforces the contract") {
  CHECK_NOTHROW(StateVector(cvec{1.0, 0.0}));
  CHECK_THROWS_AS(StateVector(cvec{1.0, 1.0}), ContractError);          // norm sqrt(2)
  CHECK_THROWS_AS(StateVector(cvec{1.0}), ContractError);               // dim 1
  const StateVector s = StateVector::normalized(cvec{3.0, 4.0});
  CHECK(std::abs(s[0] - 0.6) < 1e-15);
  CHECK(std::abs(s[1] - 0.8) < 1e-15);
  CHECK_THROWS_AS(StateVector::normalized(cvec{0.0, 0.0}), ContractError);
}

TEST_CASE("hamiltonian validates hermiticity and hbar") {
  ComplexMatrix bad(2);
  bad(0, 1) = 1.0;  // missing conjugate partner
  CHECK_THROWS_AS(Hamiltonian(bad, 1.0), ContractError);
  ComplexMatrix ok(2);
  ok(0, 1) = cdouble(0.5, 0.5);
  ok(1, 0) = cdouble(0.5, -0.5);
  CHECK_NOTHROW(Hamiltonian(ok, 1.0));
  CHECK_THROWS_AS(Hamiltonian(ok, 0.0), ContractError);
  CHECK_THROWS_AS(Hamiltonian(ok, -1.0), ContractError);
}

TEST_CASE("fubini-study speed projects out the vertical part") {
  const StateVector psi = e1();
  CHECK(fubini_study_speed(psi, cvec{0.0, 0.3}) == doctest::Approx(0.3));
  // Adding a component along psi (even imaginary) must not change the speed.
  CHECK(fubini_study_speed(psi, cvec{cdouble(0.0, 5.0), 0.3}) == doctest::Approx(0.3));
  CHECK(fubini_study_speed(psi, cvec{cdouble(2.0, -1.0), 0.3}) == doctest::Approx(0.3));
}

TEST_CASE("energy dispersion of sigma_z states") {
  ComplexMatrix sz(2);
  sz(0, 0) = 1.0;
  sz(1, 1) = -1.0;
  const Hamiltonian h(sz, 1.0);
  const StateVector plus = StateVector::normalized(cvec{1.0, 1.0});
  CHECK(energy_dispersion(h, plus) == doctest::Approx(1.0));
  CHECK(energy_dispersion(h, e1()) == doctest::Approx(0.0));
}

TEST_CASE("evolution speed equals dispersion rate for random pairs") {
  SplitMix64 rng(20240);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2 + static_cast<int>(rng.next() % 7);
    const double hbar = (trial % 2 == 0) ? 1.0 : 0.7;
    const Hamiltonian h(random_hermitian(dim, rng), hbar);
    const StateVector psi = random_state(dim, rng);
    const auto [speed, rate] = speed_equals_dispersion_check(h, psi);
    CHECK(std::abs(speed * speed - rate * rate) <= 1e-12);
  }
}

TEST_CASE("horizontal geodesic is the expected great circle") {
  const StateVector psi0 = e1();
  const cvec dot0{0.0, 1.0};

  SUBCASE("endpoints and period") {
    const StateVector at0 = horizontal_geodesic(psi0, dot0, 1.0, 0.0);
    CHECK(std::abs(at0[0] - 1.0) < 1e-14);
    const StateVector quarter = horizontal_geodesic(psi0, dot0, 1.0, pi / 2.0);
    CHECK(std::abs(quarter[0]) < 1e-14);
    CHECK(std::abs(quarter[1] - 1.0) < 1e-14);
    const StateVector full = horizontal_geodesic(psi0, dot0, 1.0, 2.0 * pi);
    CHECK(std::abs(full[0] - 1.0) < 1e-13);
  }

  SUBCASE("speed scaling") {
    const double v = 2.5;
    const StateVector s = horizontal_geodesic(psi0, cvec{0.0, v}, v, pi / (2.0 * v));
    CHECK(std::abs(s[1] - 1.0) < 1e-13);
  }

  SUBCASE("contract violations throw") {
    CHECK_THROWS_AS(horizontal_geodesic(psi0, cvec{0.5, 1.0}, 1.0, 0.1), ContractError);
    CHECK_THROWS_AS(horizontal_geodesic(psi0, dot0, 2.0, 0.1), ContractError);  // |dot| != v
    CHECK_THROWS_AS(horizontal_geodesic(psi0, dot0, 0.0, 0.1), ContractError);
  }
}

TEST_CASE("sampled geodesic satisfies the oscillator equation at second order") {
  const StateVector psi0 = e1();
  const cvec dot0{0.0, 1.0};
  auto residual_at = [&](double h) {
    const int n = static_cast<int>(std::lround(1.0 / h)) + 1;
    std::vector<StateVector> traj;
    for (int i = 0; i < n; ++i)
      traj.push_back(horizontal_geodesic(psi0, dot0, 1.0, i * h));
    return sho_residual_max(traj, 1.0, h);
  };
  const double r1 = residual_at(2e-3);
  const double r2 = residual_at(1e-3);
  CHECK(r2 < 1e-6);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.15));  // h^2 convergence
}

TEST_CASE("transition probability and arcs between rays") {
  const StateVector a = e1();
  const StateVector b = StateVector::normalized(cvec{1.0, 1.0});
  CHECK(transition_probability(a, b) == doctest::Approx(0.5));
  CHECK(arc_angle_between(a, b) == doctest::Approx(pi / 4.0));

  SUBCASE("arc endpoints land on the input rays") {
    const double theta = arc_angle_between(a, b);
    const StateVector start = geodesic_arc_between(a, b, 0.0);
    const StateVector end = geodesic_arc_between(a, b, theta);
    CHECK(transition_probability(start, a) == doctest::Approx(1.0));
    CHECK(transition_probability(end, b) == doctest::Approx(1.0));
  }

  SUBCASE("great-circle law |<a|psi(s)>| = cos s") {
    for (double s : {0.1, 0.3, 0.6}) {
      const StateVector mid = geodesic_arc_between(a, b, s);
      CHECK(transition_probability(mid, a) == doctest::Approx(std::cos(s) * std::cos(s)));
    }
  }

  SUBCASE("unit speed via finite differences") {
    // h must stay well above the acos conditioning floor: the overlap sits
    // at 1 - O(h^2) where d(acos)/dx blows up like 1/h, so tiny steps trade
    // truncation error for catastrophic rounding in the angle itself.
    const double s = 0.4, h = 1e-4;
    const StateVector p = geodesic_arc_between(a, b, s);
    const StateVector q = geodesic_arc_between(a, b, s + h);
    // d(arc angle)/ds = 1 for a unit-speed geodesic
    CHECK(arc_angle_between(p, q) / h == doctest::Approx(1.0).epsilon(1e-6));
  }

  SUBCASE("phase on the second ray does not move the arc") {
    const StateVector b_phase(cvec{std::polar(1.0 / std::sqrt(2.0), 1.1),
                                   std::polar(1.0 / std::sqrt(2.0), 1.1)});
    const StateVector m1 = geodesic_arc_between(a, b, 0.3);
    const StateVector m2 = geodesic_arc_between(a, b_phase, 0.3);
    CHECK(transition_probability(m1, m2) == doctest::Approx(1.0));
  }

  SUBCASE("orthogonal endpoints take the half-pi branch") {
    const StateVector c(cvec{0.0, 1.0});
    CHECK(arc_angle_between(a, c) == doctest::Approx(pi / 2.0));
    const StateVector mid = geodesic_arc_between(a, c, pi / 4.0);
    CHECK(transition_probability(mid, a) == doctest::Approx(0.5));
  }

  CHECK_THROWS_AS(geodesic_arc_between(a, a, 0.1), DomainError);
}

TEST_CASE("phase decomposition of a stationary eigenstate") {
  const double energy = 2.0, t_total = 2.0;
  ComplexMatrix hm(2);
  hm(0, 0) = energy;
  hm(1, 1) = -1.0;
  const Hamiltonian h(hm, 1.0);

  const int n = 2001;
  const double dt = t_total / (n - 1);
  std::vector<StateVector> traj;
  for (int i = 0; i < n; ++i)
    traj.push_back(StateVector(cvec{std::polar(1.0, -energy * i * dt), 0.0}));

  const PhaseDecomposition pd = phase_decomposition(traj, h, dt);
  CHECK(pd.dynamical == doctest::Approx(-energy * t_total).epsilon(1e-12));
  CHECK(pd.total == doctest::Approx(principal_angle(-energy * t_total)).epsilon(1e-10));
  CHECK(std::abs(pd.geometric) < 1e-10);
  // -E T = -4 -> total - dynamical = 2 pi exactly: one full winding
  CHECK(pd.winding == 1);
  CHECK(pd.geometric + 2.0 * pi * static_cast<double>(pd.winding) ==
        doctest::Approx(pd.total - pd.dynamical).epsilon(1e-12));

  SUBCASE("per-sample hamiltonian overload agrees") {
    std::vector<Hamiltonian> hs(traj.size(), h);
    const PhaseDecomposition pd2 = phase_decomposition(traj, hs, dt);
    CHECK(pd2.total == doctest::Approx(pd.total));
    CHECK(pd2.dynamical == doctest::Approx(pd.dynamical));
    CHECK(pd2.geometric == doctest::Approx(pd.geometric));
  }
}

TEST_CASE("phase decomposition rejects degenerate input") {
  const Hamiltonian h = rotation_generator(1.0);
  std::vector<StateVector> tiny{e1(), e1()};
  CHECK_THROWS_AS(phase_decomposition(tiny, h, 1e-3), ContractError);  // < 3 samples

  // quarter-turn trajectory: <psi(0)|psi(T)> = 0, total phase undefined
  std::vector<StateVector> quarter;
  const int n = 101;
  const double dt = (pi / 2.0) / (n - 1);
  for (int i = 0; i < n; ++i)
    quarter.push_back(StateVector(cvec{std::cos(i * dt), std::sin(i * dt)}));
  CHECK_THROWS_AS(phase_decomposition(quarter, h, dt), DomainError);
}

TEST_CASE("geometric phase functional is gauge invariant") {
  // Real rotation trajectory plus a closed gauge loop with one winding.
  const int n = 801;
  const double t_total = 0.8, dt = t_total / (n - 1);
  std::vector<StateVector> base, gauged;
  for (int i = 0; i < n; ++i) {
    const double t = i * dt;
    const cvec amp{std::cos(t), std::sin(t)};
    base.push_back(StateVector(amp));
    const double alpha =
        0.4 + 0.3 * std::sin(pi * t / t_total) + 2.0 * pi * t / t_total;
    gauged.push_back(StateVector(scaled(std::polar(1.0, alpha), amp)));
  }
  const double g0 = berry_phase(base, dt);
  const double g1 = berry_phase(gauged, dt);
  const double budget = berry_phase_truncation_estimate(base, dt) +
                        berry_phase_truncation_estimate(gauged, dt);
  CHECK(std::abs(principal_angle(g1 - g0)) <= std::max(10.0 * budget, 1e-12));
  // and the base trajectory is horizontal with a real positive overlap
  CHECK(std::abs(g0) < 1e-9);
}

TEST_CASE("horizontality defect flags vertical motion") {
  const int n = 801;
  const double dt = 1.0 / (n - 1);
  std::vector<StateVector> horizontal, vertical;
  const double omega = 0.7;
  for (int i = 0; i < n; ++i) {
    const double t = i * dt;
    const cvec amp{std::cos(t), std::sin(t)};
    horizontal.push_back(StateVector(amp));
    vertical.push_back(StateVector(scaled(std::polar(1.0, omega * t), amp)));
  }
  CHECK(horizontality_defect(horizontal, dt) < 1e-6);
  CHECK(horizontality_defect(vertical, dt) == doctest::Approx(omega).epsilon(1e-4));
}

TEST_CASE("horizontal lift removes a constant energy offset") {
  const double e0 = 1.3, t_total = 1.2;
  const int n = 601;
  const double dt = t_total / (n - 1);

  ComplexMatrix hm(2);  // sigma_y + e0 * identity
  hm(0, 0) = e0;
  hm(1, 1) = e0;
  hm(0, 1) = cdouble(0.0, -1.0);
  hm(1, 0) = cdouble(0.0, 1.0);
  const Hamiltonian h(hm, 1.0);

  std::vector<StateVector> traj;
  for (int i = 0; i < n; ++i) {
    const double t = i * dt;
    traj.push_back(StateVector(
        scaled(std::polar(1.0, -e0 * t), cvec{std::cos(t), std::sin(t)})));
  }
  const std::vector<StateVector> lifted = horizontal_lift(traj, h, dt);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = i * dt;
    worst = std::max(worst, std::abs(lifted[static_cast<std::size_t>(i)][0] - std::cos(t)));
    worst = std::max(worst, std::abs(lifted[static_cast<std::size_t>(i)][1] - std::sin(t)));
  }
  CHECK(worst < 1e-10);  // <H> is constant, so the quadrature is exact
}

TEST_CASE("random hermitian matrices are hermitian and seed-deterministic") {
  SplitMix64 a(77), b(77);
  const ComplexMatrix ha = random_hermitian(5, a);
  const ComplexMatrix hb = random_hermitian(5, b);
  CHECK(ha.hermiticity_defect() == 0.0);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(ha(i, j) == hb(i, j));
  const StateVector sa = random_state(4, a);
  const StateVector sb = random_state(4, b);
  for (int i = 0; i < 4; ++i) CHECK(sa[i] == sb[i]);
}
