#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "proxcg/problems.hpp"
#include "proxcg/rng.hpp"
#include "proxcg/solver.hpp"

using namespace proxcg;

namespace {

// min ||x - b||^2 + lambda |x|_1 solves to soft(b, lambda/2).
CompositeProblem tiny_lasso(double lambda = 0.2) {
  return {SmoothOracle::least_squares(DenseMatrix(2, 2, {1, 0, 0, 1}), {1.0, 0.1}),
          ProxOracle::l1(lambda)};
}

const Vector kTinyLassoSolution{0.9, 0.0};

}  // namespace

TEST_SUITE_BEGIN("solver");

TEST_CASE("variant names round trip") {
  for (Variant v : {Variant::ProxCg, Variant::ProxCgInterp, Variant::ProxCgWeakly,
                    Variant::ProxCgWeaklyInterp, Variant::Pgm, Variant::Apg})
    CHECK(variant_from_name(variant_name(v)) == v);
  CHECK_THROWS_AS(variant_from_name("newton"), std::invalid_argument);
}

TEST_CASE("every variant solves the tiny lasso") {
  for (Variant v : {Variant::ProxCg, Variant::ProxCgInterp, Variant::ProxCgWeakly,
                    Variant::ProxCgWeaklyInterp, Variant::Pgm, Variant::Apg}) {
    CAPTURE(variant_name(v));
    SolverConfig config;
    config.variant = v;
    const SolveReport report = solve(tiny_lasso(), {0.0, 0.0}, config);
    CHECK(report.status == Status::Converged);
    CHECK(norm(subtract(report.x, kTinyLassoSolution)) <= 1e-6);
  }
}

TEST_CASE("smooth strongly convex quadratic runs switch-free") {
  CompositeProblem problem{
      SmoothOracle::least_squares(DenseMatrix(2, 2, {1, 0, 0, 2}), {1.0, 1.0}),
      ProxOracle::zero()};
  SolverConfig config;
  const SolveReport report = solve(problem, {0.0, 0.0}, config);
  CHECK(report.status == Status::Converged);
  CHECK(report.switch_count == 0);
  CHECK(report.x[0] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(report.x[1] == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("stationary start converges in zero iterations") {
  SolverConfig config;
  const SolveReport report = solve(tiny_lasso(), kTinyLassoSolution, config);
  CHECK(report.status == Status::Converged);
  CHECK(report.iterations == 0);
  CHECK(report.trace.empty());
}

TEST_CASE("max_iter is respected") {
  CompositeProblem problem{
      SmoothOracle::least_squares(DenseMatrix(2, 2, {1, 0.3, 0.3, 2}), {1.0, 0.1}),
      ProxOracle::l1(0.2)};
  SolverConfig config;
  config.max_iter = 3;
  config.tol = 1e-16;
  const SolveReport report = solve(problem, {5.0, -3.0}, config);
  CHECK(report.status == Status::MaxIter);
  CHECK(report.iterations == 3);
  CHECK(report.trace.size() == 3);
}

TEST_CASE("apg rejects weakly convex problems") {
  CompositeProblem problem{SmoothOracle::least_squares(DenseMatrix(1, 1, {1}), {1}),
                           ProxOracle::mcp(0.5, 2.0)};
  SolverConfig config;
  config.variant = Variant::Apg;
  CHECK_THROWS_AS(solve(problem, {0.0}, config), std::invalid_argument);
}

TEST_CASE("apg needs fewer iterations than pgm on a smooth quadratic") {
  // ill-conditioned diagonal least squares, h = 0
  const std::size_t n = 20;
  Vector entries(n * n, 0.0), b(n);
  Rng rng(5);
  for (std::size_t i = 0; i < n; ++i) {
    entries[i * n + i] = 0.2 + 2.0 * static_cast<double>(i) / n;
    b[i] = rng.normal();
  }
  CompositeProblem problem{SmoothOracle::least_squares(DenseMatrix(n, n, entries), b),
                           ProxOracle::zero()};
  SolverConfig config;
  config.tol = 1e-8;

  config.variant = Variant::Pgm;
  const SolveReport pgm = solve(problem, Vector(n, 0.0), config);
  config.variant = Variant::Apg;
  const SolveReport apg = solve(problem, Vector(n, 0.0), config);
  CHECK(pgm.status == Status::Converged);
  CHECK(apg.status == Status::Converged);
  CHECK(apg.iterations < pgm.iterations);
}

TEST_CASE("pgm decreases monotonically on weakly convex problems") {
  McpSpec spec{60, 20, 5, 0.1, 2.0, false, 9};
  CompositeProblem problem = gen_mcp(spec);
  SolverConfig config;
  config.variant = Variant::Pgm;
  config.max_iter = 50000;
  const SolveReport report = solve(problem, Vector(20, 0.0), config);
  CHECK(report.status == Status::Converged);
  double prev = report.initial_f;
  for (const TraceRow& row : report.trace) {
    CHECK(row.f <= prev + 1e-10 * (1.0 + std::abs(prev)));
    prev = row.f;
  }
}

TEST_CASE("weakly convex step sizes stay below 1/rho") {
  McpSpec spec{40, 15, 4, 0.1, 0.1, false, 3};  // rho = 10
  CompositeProblem problem = gen_mcp(spec);
  CHECK(problem.rho() == doctest::Approx(10.0));
  SolverConfig config;
  config.variant = Variant::ProxCgWeakly;  // default mu0 = 1 violates mu < 1/rho
  config.max_iter = 5000;
  const SolveReport report = solve(problem, Vector(15, 0.0), config);
  CHECK(report.status == Status::Converged);
  for (const TraceRow& row : report.trace) CHECK(row.mu < 0.1);
}

TEST_CASE("l1 stationarity certificate at the returned point") {
  LassoSpec spec{80, 25, 6, 0.1, false, 21};
  LassoInstance instance = gen_lasso(spec);
  SolverConfig config;
  config.tol = 1e-10;  // the certificate scale is ||eta|| / mu, so solve tightly
  const SolveReport report = solve(instance.problem, Vector(25, 0.0), config);
  REQUIRE(report.status == Status::Converged);

  const Vector grad = instance.problem.g.grad(report.x);
  const double lambda = 0.1;
  for (std::size_t j = 0; j < report.x.size(); ++j) {
    if (report.x[j] == 0.0) {
      CHECK(std::abs(grad[j]) <= lambda + 1e-5);
    } else {
      const double resid = grad[j] + lambda * (report.x[j] > 0 ? 1.0 : -1.0);
      CHECK(std::abs(resid) <= 1e-5 * (1.0 + std::abs(grad[j])));
    }
  }
}

TEST_CASE("reports are bit-identical across repeated runs") {
  LassoSpec spec{50, 18, 5, 0.1, false, 33};
  SolverConfig config;
  for (Variant v : {Variant::ProxCg, Variant::ProxCgInterp, Variant::Pgm, Variant::Apg}) {
    config.variant = v;
    const SolveReport a = solve(gen_lasso(spec).problem, Vector(18, 0.0), config);
    const SolveReport b = solve(gen_lasso(spec).problem, Vector(18, 0.0), config);
    REQUIRE(a.trace.size() == b.trace.size());
    CHECK(a.x == b.x);
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      CHECK(a.trace[i].f == b.trace[i].f);
      CHECK(a.trace[i].eta_norm == b.trace[i].eta_norm);
      CHECK(a.trace[i].mu == b.trace[i].mu);
      CHECK(a.trace[i].alpha == b.trace[i].alpha);
      CHECK(a.trace[i].g_evals == b.trace[i].g_evals);
    }
  }
}

TEST_CASE("non-finite objective reports an oracle error") {
  CompositeProblem problem{
      SmoothOracle::least_squares(DenseMatrix(1, 1, {1e300}), {0.0}), ProxOracle::zero()};
  SolverConfig config;
  const SolveReport report = solve(problem, {1e300}, config);  // f overflows to inf
  CHECK(report.status == Status::OracleError);
  CHECK(!report.error.empty());
}

TEST_CASE("direction blow-up guard holds on a benchmark run") {
  LassoSpec spec{100, 30, 8, 0.1, false, 12};
  LassoInstance instance = gen_lasso(spec);
  SolverConfig config;
  const SolveReport report = solve(instance.problem, Vector(30, 0.0), config);
  CHECK(report.status == Status::Converged);
  CHECK(report.max_direction_ratio > 0.0);
  CHECK(report.max_direction_ratio <= 1e6);
}

TEST_CASE("residual difference obeys the Lipschitz-style bound on quadratics") {
  // diagonal least squares: L = 2 max(diag)^2 exactly
  const std::size_t n = 10;
  Vector entries(n * n, 0.0), b(n);
  Rng rng(14);
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = 0.5 + 1.5 * rng.uniform();
    entries[i * n + i] = d;
    max_diag = std::max(max_diag, d);
    b[i] = rng.normal();
  }
  const double lipschitz = 2.0 * max_diag * max_diag;
  CompositeProblem problem{SmoothOracle::least_squares(DenseMatrix(n, n, entries), b),
                           ProxOracle::l1(0.05)};

  std::vector<Vector> etas, xs;
  double mu_min = 1.0;
  SolverConfig config;
  const SolveReport report =
      solve(problem, Vector(n, 1.0), config, [&](const IterationEvent& ev) {
        etas.push_back(ev.eta);
        xs.push_back(ev.x);
        mu_min = std::min(mu_min, ev.mu);
      });
  REQUIRE(report.status == Status::Converged);
  REQUIRE(etas.size() >= 2);

  const double bound = (2.0 / mu_min + lipschitz) * 10.0;
  for (std::size_t k = 1; k < etas.size(); ++k) {
    const double y_norm = norm(subtract(etas[k], etas[k - 1]));
    const double s_norm = norm(subtract(xs[k], xs[k - 1]));
    if (s_norm > 0.0) CHECK(y_norm / s_norm <= bound);
  }
}

TEST_CASE("residual summability proxy on a mild problem") {
  // with L ~ 4 the backtracked step stays at 0.25, so the final residual is
  // within a factor 4 of tol * max(1, ||x||)
  CompositeProblem problem{
      SmoothOracle::least_squares(DenseMatrix(2, 2, {1.0, 0.2, 0.2, 1.2}), {1.0, -0.4}),
      ProxOracle::l1(0.15)};
  SolverConfig config;
  const SolveReport report = solve(problem, {4.0, -4.0}, config);
  REQUIRE(report.status == Status::Converged);
  double eta_sq_sum = 0.0;
  for (const TraceRow& row : report.trace) eta_sq_sum += row.eta_norm * row.eta_norm;
  CHECK(std::isfinite(eta_sq_sum));
  CHECK(report.eta_norm <= 10.0 * config.tol * std::max(1.0, norm(report.x)));
}

TEST_CASE("step bookkeeping identities") {
  LassoSpec spec{80, 25, 6, 0.15, false, 31};
  LassoInstance instance = gen_lasso(spec);
  SolverConfig config;
  long switches_seen = 0;
  const SolveReport report =
      solve(instance.problem, Vector(25, 0.0), config, [&](const IterationEvent& ev) {
        const Vector step = subtract(ev.x_next, ev.x);
        if (ev.kind == StepKind::CgStep) {
          // x_next - x = alpha d
          for (std::size_t i = 0; i < step.size(); ++i)
            CHECK(step[i] == doctest::Approx(ev.alpha * ev.d[i]).epsilon(1e-12));
        } else {
          ++switches_seen;
          // x_next = x_plus and the recorded direction is -eta
          CHECK(ev.x_next == ev.x_plus);
          for (std::size_t i = 0; i < step.size(); ++i) {
            CHECK(step[i] == doctest::Approx(-ev.mu * ev.eta[i]).epsilon(1e-12));
            CHECK(ev.d[i] == -ev.eta[i]);
          }
        }
      });
  CHECK(report.status == Status::Converged);
  CHECK(switches_seen == report.switch_count);
}

TEST_CASE("mu sequence is nonincreasing without the increase flag") {
  LassoSpec spec{60, 20, 5, 0.1, false, 77};
  SolverConfig config;
  const SolveReport report = solve(gen_lasso(spec).problem, Vector(20, 0.0), config);
  double prev = config.mu0;
  for (const TraceRow& row : report.trace) {
    CHECK(row.mu <= prev + 1e-15);
    prev = row.mu;
  }
}

TEST_CASE("mu increase flag lifts the step size") {
  LassoSpec spec{60, 20, 5, 0.1, false, 77};
  SolverConfig config;
  config.mu_increase = true;
  const SolveReport report = solve(gen_lasso(spec).problem, Vector(20, 0.0), config);
  CHECK(report.status == Status::Converged);
  bool grew = false;
  double prev = config.mu0;
  for (const TraceRow& row : report.trace) {
    if (row.mu > prev) grew = true;
    prev = row.mu;
  }
  CHECK(grew);
}

TEST_SUITE_END();
