"""Composite-minimization solvers: proximal nonlinear CG, proximal gradient,
and an accelerated baseline, with seeded benchmark generators and
Dolan-More performance profiles."""

from ._proxcg import (
    CompositeProblem,
    FbrResult,
    LibsvmDataset,
    LinearOperator,
    OracleError,
    ParseError,
    ProxOracle,
    Rng,
    SmoothOracle,
    SolveReport,
    SolverConfig,
    Status,
    TraceRow,
    backtrack_mu,
    dct_operator,
    dense_operator,
    dolan_more,
    fbr,
    gen_lasso,
    gen_mcp,
    gen_student_t,
    logistic_problem,
    matvec,
    matvec_t,
    parse_libsvm,
    parse_libsvm_file,
    rate_envelope,
    serialize_libsvm,
    solve,
    sparse_operator,
)

__all__ = [
    "CompositeProblem",
    "FbrResult",
    "LibsvmDataset",
    "LinearOperator",
    "OracleError",
    "ParseError",
    "ProxOracle",
    "Rng",
    "SmoothOracle",
    "SolveReport",
    "SolverConfig",
    "Status",
    "TraceRow",
    "backtrack_mu",
    "dct_operator",
    "dense_operator",
    "dolan_more",
    "fbr",
    "gen_lasso",
    "gen_mcp",
    "gen_student_t",
    "logistic_problem",
    "matvec",
    "matvec_t",
    "parse_libsvm",
    "parse_libsvm_file",
    "rate_envelope",
    "serialize_libsvm",
    "solve",
    "sparse_operator",
]
