"""Exact, witness-producing decisions of the projection problems P1-P7
over MV-algebra backends: free/Farey piecewise-linear functions, finite
chains, lexicographic chains, and Z + theta*Z with theta given by a
continued fraction."""

from .terms import (Term, Zero, Var, Neg, Oplus, ZERO, parse, render, size,
                    max_var, one, times, minus, join, meet, dist,
                    reduce_order, reduce_word, reduce_eccentricity,
                    reduce_central, reduce_rho)
from .pwl import (PwlComplex, interpret_free, eval_at, is_zero,
                  CellBudgetExceeded)
from .cf import (CfNumber, cf_from_surd, compare_rational,
                 sign_a_plus_b_theta, StreamExhausted)
from .backends import (ChainBackend, BehnckeLeptinBackend, EffrosShenBackend,
                       FreeBackend, GammaElement, parse_assignment)
from .engine import ProblemId, Verdict, decide, decide_by_reduction_path

__all__ = [
    "Term", "Zero", "Var", "Neg", "Oplus", "ZERO",
    "parse", "render", "size", "max_var",
    "one", "times", "minus", "join", "meet", "dist",
    "reduce_order", "reduce_word", "reduce_eccentricity", "reduce_central",
    "reduce_rho",
    "PwlComplex", "interpret_free", "eval_at", "is_zero", "CellBudgetExceeded",
    "CfNumber", "cf_from_surd", "compare_rational", "sign_a_plus_b_theta",
    "StreamExhausted",
    "ChainBackend", "BehnckeLeptinBackend", "EffrosShenBackend", "FreeBackend",
    "GammaElement", "parse_assignment",
    "ProblemId", "Verdict", "decide", "decide_by_reduction_path",
]
