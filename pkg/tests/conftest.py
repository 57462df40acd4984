"""Shared test helpers: independent oracles and random instance generators."""

import random
from fractions import Fraction

import pytest

from mvdecide.terms import Term, Zero, Var, Neg, Oplus, ZERO


# ---------------------------------------------------------------------------
# direct recursive evaluation in [0,1] (independent of the pwl machinery)

def mv_eval(t: Term, point) -> Fraction:
    """Semantics of a term at a rational point, computed directly."""
    if isinstance(t, Zero):
        return Fraction(0)
    if isinstance(t, Var):
        return Fraction(point[t.index - 1])
    if isinstance(t, Neg):
        return 1 - mv_eval(t.arg, point)
    if isinstance(t, Oplus):
        return min(Fraction(1), mv_eval(t.left, point) + mv_eval(t.right, point))
    raise TypeError(t)


def mv_eval_scaled(t: Term, nums, den: int) -> int:
    """Value at (nums[0]/den, ...) scaled by den; pure integer arithmetic.

    MV operations preserve the denominator, so the result is the exact
    numerator of the value over den.
    """
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Var):
        return nums[t.index - 1]
    if isinstance(t, Neg):
        return den - mv_eval_scaled(t.arg, nums, den)
    if isinstance(t, Oplus):
        return min(den, mv_eval_scaled(t.left, nums, den) +
                   mv_eval_scaled(t.right, nums, den))
    raise TypeError(t)


def grid_is_zero_1d(t: Term, max_den: int) -> bool:
    """Complete zero test for one-variable functions whose breakpoint
    denominators are all <= max_den."""
    for q in range(1, max_den + 1):
        for p in range(q + 1):
            if mv_eval_scaled(t, (p,), q) != 0:
                return False
    return True


def farey_fractions(max_den: int):
    """All rationals in [0,1] with denominator <= max_den."""
    return sorted({Fraction(p, q)
                   for q in range(1, max_den + 1) for p in range(q + 1)})


# ---------------------------------------------------------------------------
# random terms

def random_term(rng: random.Random, n_vars: int, size_budget: int) -> Term:
    """A random core-syntax term whose symbol count is about size_budget."""
    if size_budget <= 1:
        return Var(rng.randint(1, n_vars)) if rng.random() < 0.8 else ZERO
    roll = rng.random()
    if roll < 0.35:
        return Neg(random_term(rng, n_vars, size_budget - 1))
    if roll < 0.9:
        left_budget = rng.randint(1, max(1, size_budget - 4))
        return Oplus(random_term(rng, n_vars, left_budget),
                     random_term(rng, n_vars, size_budget - 3 - left_budget))
    return Var(rng.randint(1, n_vars))


@pytest.fixture
def rng():
    return random.Random(20240817)
