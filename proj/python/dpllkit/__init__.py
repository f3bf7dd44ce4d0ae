"""Proof-producing DPLL solver, proof checkers and DPLL-to-resolution translation.

Literals are DIMACS integers, clauses are lists of literals and formulae are
lists of clauses.
"""

from ._dpllkit import (
    CheckReport,
    DimacsError,
    DpllDerivation,
    InvalidDerivation,
    OracleCapExceeded,
    ProofParseError,
    ResDerivation,
    SolveResult,
    brute_force_sat,
    check_dpll,
    check_res,
    decide,
    dpll_to_res,
    emit_dimacs,
    gen_php,
    parse_dimacs,
    parse_dpll,
    parse_res,
    refute,
    solve,
)

__all__ = [
    "CheckReport",
    "DimacsError",
    "DpllDerivation",
    "InvalidDerivation",
    "OracleCapExceeded",
    "ProofParseError",
    "ResDerivation",
    "SolveResult",
    "brute_force_sat",
    "check_dpll",
    "check_res",
    "decide",
    "dpll_to_res",
    "emit_dimacs",
    "gen_php",
    "parse_dimacs",
    "parse_dpll",
    "parse_res",
    "refute",
    "solve",
]
