#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "proxcg/bench.hpp"
#include "proxcg/csv.hpp"
#include "proxcg/errors.hpp"
#include "proxcg/libsvm.hpp"
#include "proxcg/problems.hpp"
#include "proxcg/residual.hpp"
#include "proxcg/rng.hpp"
#include "proxcg/solver.hpp"

namespace py = pybind11;
using namespace proxcg;

namespace {

CostMatrix cost_matrix_from_lists(const std::vector<std::string>& solvers,
                                  const std::vector<std::vector<double>>& costs) {
  CostMatrix matrix(solvers, costs.size());
  for (std::size_t p = 0; p < costs.size(); ++p) {
    if (costs[p].size() != solvers.size())
      throw std::invalid_argument("cost rows must have one entry per solver");
    for (std::size_t s = 0; s < solvers.size(); ++s) matrix.at(p, s) = costs[p][s];
  }
  return matrix;
}

}  // namespace

PYBIND11_MODULE(_proxcg, m) {
  m.doc() = "Composite-minimization solvers built on the forward-backward residual";

  py::register_exception<OracleError>(m, "OracleError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Rng>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", &Rng::uniform)
      .def("normal", &Rng::normal)
      .def("student_t5", &Rng::student_t5);

  py::class_<LinearOperator>(m, "LinearOperator")
      .def_property_readonly("rows", &LinearOperator::rows)
      .def_property_readonly("cols", &LinearOperator::cols)
      .def("apply", &LinearOperator::apply, py::arg("x"))
      .def("apply_transpose", &LinearOperator::apply_transpose, py::arg("y"));

  m.def(
      "dense_operator",
      [](std::size_t rows, std::size_t cols, Vector entries) {
        return LinearOperator(DenseMatrix(rows, cols, std::move(entries)));
      },
      py::arg("rows"), py::arg("cols"), py::arg("entries"),
      "Dense operator from row-major entries");
  m.def(
      "sparse_operator",
      [](std::size_t rows, std::size_t cols, std::vector<std::size_t> row_ptr,
         std::vector<std::size_t> col_idx, Vector values) {
        return LinearOperator(
            SparseMatrix(rows, cols, std::move(row_ptr), std::move(col_idx), std::move(values)));
      },
      py::arg("rows"), py::arg("cols"), py::arg("row_ptr"), py::arg("col_idx"),
      py::arg("values"), "CSR operator");
  m.def(
      "dct_operator",
      [](std::size_t n, std::vector<std::size_t> indices) {
        return LinearOperator(DctSubsampleOp(n, std::move(indices)));
      },
      py::arg("n"), py::arg("indices"), "Subsampled orthonormal DCT-II operator");
  m.def("matvec", &matvec, py::arg("op"), py::arg("x"));
  m.def("matvec_t", &matvec_t, py::arg("op"), py::arg("y"));

  py::class_<SmoothOracle>(m, "SmoothOracle")
      .def_static("least_squares", &SmoothOracle::least_squares, py::arg("a"), py::arg("b"))
      .def_static("logistic", &SmoothOracle::logistic, py::arg("rows"), py::arg("labels"))
      .def_static("student_t", &SmoothOracle::student_t, py::arg("a"), py::arg("b"),
                  py::arg("nu") = 0.001)
      .def("value", &SmoothOracle::value, py::arg("x"))
      .def("grad", &SmoothOracle::grad, py::arg("x"))
      .def_property_readonly("dim", &SmoothOracle::dim);

  py::class_<ProxOracle>(m, "ProxOracle")
      .def_static("zero", &ProxOracle::zero)
      .def_static("l1", &ProxOracle::l1, py::arg("lam"))
      .def_static("mcp", &ProxOracle::mcp, py::arg("lam"), py::arg("c"))
      .def("value", &ProxOracle::value, py::arg("x"))
      .def("prox", &ProxOracle::prox, py::arg("v"), py::arg("mu"))
      .def("dir_deriv", &ProxOracle::dir_deriv, py::arg("x"), py::arg("d"))
      .def_property_readonly("modulus", &ProxOracle::modulus);

  py::class_<CompositeProblem>(m, "CompositeProblem")
      .def(py::init<SmoothOracle, ProxOracle>(), py::arg("g"), py::arg("h"))
      .def_readonly("g", &CompositeProblem::g)
      .def_readonly("h", &CompositeProblem::h)
      .def("f", &CompositeProblem::f, py::arg("x"))
      .def_property_readonly("dim", &CompositeProblem::dim)
      .def_property_readonly("rho", &CompositeProblem::rho);

  py::class_<FbrResult>(m, "FbrResult")
      .def_readonly("x_plus", &FbrResult::x_plus)
      .def_readonly("eta", &FbrResult::eta)
      .def_readonly("mu", &FbrResult::mu);
  m.def("fbr", &fbr, py::arg("problem"), py::arg("x"), py::arg("mu"),
        "Forward-backward residual at x");
  m.def("backtrack_mu", &backtrack_mu, py::arg("problem"), py::arg("x"), py::arg("mu_prev"),
        py::arg("kappa"), py::arg("max_halvings") = 64);

  py::enum_<Status>(m, "Status")
      .value("CONVERGED", Status::Converged)
      .value("MAX_ITER", Status::MaxIter)
      .value("ORACLE_ERROR", Status::OracleError);

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("mu0", &SolverConfig::mu0)
      .def_readwrite("kappa", &SolverConfig::kappa)
      .def_readwrite("nu_hat", &SolverConfig::nu_hat)
      .def_readwrite("delta", &SolverConfig::delta)
      .def_readwrite("trial_coeff", &SolverConfig::trial_coeff)
      .def_readwrite("theta", &SolverConfig::theta)
      .def_readwrite("t_bar", &SolverConfig::t_bar)
      .def_readwrite("tau", &SolverConfig::tau)
      .def_readwrite("tol", &SolverConfig::tol)
      .def_readwrite("max_iter", &SolverConfig::max_iter)
      .def_readwrite("mu_increase", &SolverConfig::mu_increase)
      .def_readwrite("mu_increase_factor", &SolverConfig::mu_increase_factor)
      .def_property(
          "variant", [](const SolverConfig& c) { return std::string(variant_name(c.variant)); },
          [](SolverConfig& c, const std::string& name) { c.variant = variant_from_name(name); });

  py::class_<TraceRow>(m, "TraceRow")
      .def_readonly("k", &TraceRow::k)
      .def_readonly("f", &TraceRow::f)
      .def_readonly("eta_norm", &TraceRow::eta_norm)
      .def_readonly("mu", &TraceRow::mu)
      .def_readonly("alpha", &TraceRow::alpha)
      .def_property_readonly("step_kind",
                             [](const TraceRow& r) { return std::string(step_kind_name(r.kind)); })
      .def_readonly("g_evals", &TraceRow::g_evals)
      .def_readonly("h_evals", &TraceRow::h_evals)
      .def_readonly("prox_evals", &TraceRow::prox_evals);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("status", &SolveReport::status)
      .def_readonly("iterations", &SolveReport::iterations)
      .def_readonly("switch_count", &SolveReport::switch_count)
      .def_readonly("trace", &SolveReport::trace)
      .def_readonly("x", &SolveReport::x)
      .def_readonly("f", &SolveReport::f)
      .def_readonly("eta_norm", &SolveReport::eta_norm)
      .def_readonly("initial_f", &SolveReport::initial_f)
      .def_readonly("wall_time_s", &SolveReport::wall_time_s)
      .def_readonly("error", &SolveReport::error)
      .def("switch_ratio", &SolveReport::switch_ratio);

  m.def(
      "solve",
      [](const CompositeProblem& problem, const Vector& x0, const SolverConfig& config) {
        return solve(problem, x0, config);
      },
      py::arg("problem"), py::arg("x0"), py::arg("config") = SolverConfig(),
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "gen_lasso",
      [](std::size_t mm, std::size_t n, std::size_t s, double lam, bool sparse_a,
         std::uint64_t seed) {
        auto instance = gen_lasso(LassoSpec{mm, n, s, lam, sparse_a, seed});
        return py::make_tuple(std::move(instance.problem), std::move(instance.x_true));
      },
      py::arg("m"), py::arg("n"), py::arg("s"), py::arg("lam") = 0.1,
      py::arg("sparse_a") = false, py::arg("seed") = 0);
  m.def(
      "gen_mcp",
      [](std::size_t mm, std::size_t n, std::size_t s, double lam, double c, bool sparse_a,
         std::uint64_t seed) {
        return gen_mcp(McpSpec{mm, n, s, lam, c, sparse_a, seed});
      },
      py::arg("m"), py::arg("n"), py::arg("s"), py::arg("lam") = 0.1, py::arg("c") = 10.0,
      py::arg("sparse_a") = false, py::arg("seed") = 0);
  m.def(
      "gen_student_t",
      [](std::size_t n, double d, double lam, double nu, std::uint64_t seed) {
        auto instance = gen_student_t(StudentTSpec{n, d, lam, nu, seed});
        return py::make_tuple(std::move(instance.problem), std::move(instance.x_true));
      },
      py::arg("n"), py::arg("d") = 20.0, py::arg("lam") = 0.01, py::arg("nu") = 0.001,
      py::arg("seed") = 0);

  py::class_<LibsvmDataset>(m, "LibsvmDataset")
      .def_property_readonly("samples", &LibsvmDataset::samples)
      .def_property_readonly("num_features", &LibsvmDataset::num_features)
      .def_readonly("labels", &LibsvmDataset::labels);
  m.def(
      "parse_libsvm",
      [](const std::string& text, std::size_t n_override) {
        return parse_libsvm(text, n_override);
      },
      py::arg("text"), py::arg("n_features") = 0);
  m.def("parse_libsvm_file", &parse_libsvm_file, py::arg("path"), py::arg("n_features") = 0);
  m.def("serialize_libsvm", &serialize_libsvm, py::arg("dataset"));
  m.def("logistic_problem", &logistic_problem, py::arg("dataset"), py::arg("lam"));

  m.def(
      "dolan_more",
      [](const std::vector<std::string>& solvers, const std::vector<std::vector<double>>& costs) {
        const ProfileTable table = dolan_more(cost_matrix_from_lists(solvers, costs));
        return py::make_tuple(table.solvers, table.taus, table.p);
      },
      py::arg("solvers"), py::arg("costs"),
      "Performance profile from a problems-by-solvers cost matrix (NaN marks a "
      "run that did not converge); returns (solvers, taus, curves)");
  m.def("rate_envelope", &rate_envelope, py::arg("iterates"), py::arg("x_ref"));
}
