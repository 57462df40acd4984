"""Uniform decision of the seven projection problems over any backend.

Everything funnels through the zero test: the two-term problems and the
centrality problem are decided on their reduction terms, nontriviality
through a pair of zero tests.  Witnesses come back as rational points on
the free backend and as element values on the chain backends.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import pwl
from .backends import EffrosShenBackend, FreeBackend, ChainBackend
from .terms import (Term, ZERO, Neg, max_var, reduce_central,
                    reduce_eccentricity, reduce_order, reduce_rho, reduce_word)


class ProblemId(Enum):
    P1 = "word"
    P2 = "order"
    P3 = "eccentricity"
    P4 = "zero"
    P5 = "central"
    P6 = "nontrivial"
    P7 = "central-nontrivial"

    @property
    def arity(self) -> int:
        return 2 if self in (ProblemId.P1, ProblemId.P2, ProblemId.P3) else 1


class ArityMismatch(ValueError):
    pass


class NoKnownReduction(ValueError):
    pass


@dataclass
class Verdict:
    answer: bool
    witness: object = None  # (point, value) on Free; GammaElement elsewhere
    quotients_consumed: int | None = None
    cells_built: int | None = None

    def __bool__(self):
        return self.answer


def _check_arity(problem, terms):
    if len(terms) != problem.arity:
        raise ArityMismatch(
            f"{problem.name} takes {problem.arity} term(s), got {len(terms)}")


def _zero_verdict(backend, phi, assignment, cell_budget):
    """Zero test of phi; witness explains a 'no'."""
    if isinstance(backend, FreeBackend):
        f, built = pwl.interpret_free_counted(phi, backend.n, cell_budget)
        zero, wit = pwl.is_zero(f)
        return Verdict(zero, wit, cells_built=built)
    x = backend.interpret(phi, assignment)
    v = Verdict(backend.is_zero(x), None if backend.is_zero(x) else x)
    if isinstance(backend, EffrosShenBackend):
        v.quotients_consumed = backend.theta.consumed
    return v


def decide(problem: ProblemId, backend, terms, assignment=None,
           cell_budget: int = pwl.DEFAULT_CELL_BUDGET) -> Verdict:
    """Decide a problem instance directly.

    terms is a sequence of Terms of the problem's arity.  assignment
    maps variable indices to backend elements (ignored on Free, where
    X_i is the i-th coordinate; Effros-Shen defaults X1 to theta).
    """
    _check_arity(problem, terms)
    if problem is ProblemId.P4:
        return _zero_verdict(backend, terms[0], assignment, cell_budget)
    if problem is ProblemId.P1:
        return _zero_verdict(backend, reduce_word(*terms), assignment, cell_budget)
    if problem is ProblemId.P2:
        return _zero_verdict(backend, reduce_order(*terms), assignment, cell_budget)
    if problem is ProblemId.P3:
        return _zero_verdict(backend, reduce_eccentricity(*terms), assignment,
                             cell_budget)
    if problem is ProblemId.P5:
        return _zero_verdict(backend, reduce_central(terms[0]), assignment,
                             cell_budget)
    if problem is ProblemId.P6:
        return _decide_nontrivial(backend, terms[0], assignment, cell_budget)
    if problem is ProblemId.P7:
        v5 = decide(ProblemId.P5, backend, terms, assignment, cell_budget)
        if not v5.answer:
            return Verdict(False, v5.witness, v5.quotients_consumed,
                           v5.cells_built)
        return _decide_nontrivial(backend, terms[0], assignment, cell_budget)


def _decide_nontrivial(backend, phi, assignment, cell_budget):
    """phi codes neither 0 nor 1; a 'yes' is certified by a strict value."""
    if isinstance(backend, FreeBackend):
        f, built = pwl.interpret_free_counted(phi, backend.n, cell_budget)
        zero, _ = pwl.is_zero(f)
        one, _ = pwl.is_one(f)
        answer = not zero and not one
        wit = pwl.nontrivial_witness(f) if answer else None
        return Verdict(answer, wit, cells_built=built)
    x = backend.interpret(phi, assignment)
    answer = not backend.is_zero(x) and not backend.is_one(x)
    v = Verdict(answer, x if answer else None)
    if isinstance(backend, EffrosShenBackend):
        v.quotients_consumed = backend.theta.consumed
    return v


# ---------------------------------------------------------------------------
# decision through an explicit reduction path

def _to_zero_term(problem, terms):
    if problem is ProblemId.P1:
        return reduce_word(*terms)
    if problem is ProblemId.P2:
        return reduce_order(*terms)
    if problem is ProblemId.P3:
        return reduce_eccentricity(*terms)
    if problem is ProblemId.P4:
        return terms[0]
    if problem is ProblemId.P5:
        return reduce_central(terms[0])
    raise NoKnownReduction(f"no reduction from {problem.name} is implemented")


def decide_by_reduction_path(problem: ProblemId, backend, terms,
                             assignment=None, path: ProblemId = ProblemId.P4,
                             cell_budget: int = pwl.DEFAULT_CELL_BUDGET) -> Verdict:
    """Decide `problem` by transforming it into an instance of `path`.

    Supported: any of P1, P2, P3, P4, P5 routed through any of P1, P2,
    P3, P4; additionally P4 through P5 (the rho transformer) on backends
    with no two-element quotient, which excludes the free backend and
    the two-element chain.  The path through P5 further assumes the
    assignment generates the algebra (the canonical presets do).
    """
    _check_arity(problem, terms)
    phi = _to_zero_term(problem, terms)
    if path is ProblemId.P4:
        return decide(ProblemId.P4, backend, [phi], assignment, cell_budget)
    if path in (ProblemId.P1, ProblemId.P2, ProblemId.P3):
        return decide(path, backend, [phi, ZERO], assignment, cell_budget)
    if path is ProblemId.P5:
        if isinstance(backend, FreeBackend):
            raise NoKnownReduction(
                "the zero-to-central equivalence fails on free algebras "
                "(they have two-element quotients)")
        if isinstance(backend, ChainBackend) and backend.k == 1:
            raise NoKnownReduction(
                "the zero-to-central equivalence fails on the two-element chain")
        n = max(1, max_var(phi))
        return decide(ProblemId.P5, backend, [reduce_rho(phi, n)],
                      assignment, cell_budget)
    raise NoKnownReduction(f"no reduction onto {path.name} is implemented")
