#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "proxcg/direction.hpp"
#include "proxcg/rng.hpp"

using namespace proxcg;

TEST_SUITE_BEGIN("direction");

TEST_CASE("select_nu branches") {
  CHECK(select_nu({1, 0}, {1, 0}, 1e-8) == 0.0);
  CHECK(select_nu({1, 0}, {-1, 0}, 0.5) == doctest::Approx(1.5));
  CHECK(select_nu({1, 0}, {0, 1}, 0.5) == doctest::Approx(0.5));
  CHECK_THROWS_AS(select_nu({0, 0}, {1, 0}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(select_nu({1, 0}, {1, 0}, 0.0), std::invalid_argument);
}

TEST_CASE("safeguarded curvature bound") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    Vector s(4), y(4);
    for (auto& v : s) v = rng.uniform_range(-2, 2);
    for (auto& v : y) v = rng.uniform_range(-2, 2);
    if (norm(s) == 0.0) continue;
    const double nu_hat = rng.uniform_range(1e-8, 0.5);
    const double nu = select_nu(s, y, nu_hat);
    Vector z = y;
    axpy(nu, s, z);
    CHECK(dot(s, z) >= nu_hat * dot(s, s) * (1.0 - 1e-12));
  }
}

TEST_CASE("hand-evaluated update") {
  const DirectionResult r =
      compute_direction({1, 0}, {0, 1}, {0, -1}, {0, -0.5}, 1e-8);
  CHECK(!r.fallback);
  CHECK(r.nu == 0.0);
  CHECK(r.beta == doctest::Approx(1.0));
  CHECK(r.gamma == doctest::Approx(0.0));
  CHECK(r.d[0] == doctest::Approx(-1.0));
  CHECK(r.d[1] == doctest::Approx(-1.0));
  // eta^T d = -||eta||^2
  CHECK(dot(Vector{1, 0}, r.d) == doctest::Approx(-1.0));
}

TEST_CASE("descent identity holds across random inputs") {
  Rng rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng.below(8);
    Vector eta(n), eta_prev(n), d_prev(n), s_prev(n);
    for (auto& v : eta) v = rng.normal();
    for (auto& v : eta_prev) v = rng.normal();
    for (auto& v : d_prev) v = rng.normal();
    for (auto& v : s_prev) v = rng.normal();
    if (norm(s_prev) == 0.0) continue;

    const DirectionResult r = compute_direction(eta, eta_prev, d_prev, s_prev, 1e-8);
    const double eta_sq = dot(eta, eta);
    CHECK(std::abs(dot(eta, r.d) + eta_sq) <= 1e-10 * (1.0 + eta_sq));
  }
}

TEST_CASE("degenerate denominator falls back to -eta") {
  // y = 0 and s orthogonal to d_prev makes the denominator vanish after the
  // nu correction is applied to an orthogonal pair.
  const Vector eta{1, 1};
  const DirectionResult r = compute_direction(eta, eta, {1, 0}, {0, 1}, 1e-8);
  // here y = 0, nu = nu_hat, denom = nu_hat * d^T s = 0
  CHECK(r.fallback);
  CHECK(r.d[0] == -1.0);
  CHECK(r.d[1] == -1.0);
}

TEST_SUITE_END();
