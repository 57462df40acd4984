"""Exact comparison machinery for irrationals given by continued fractions.

Sources: eventually periodic expansions (quadratic surds), the built-in
1/e pattern, and user-supplied quotient streams with a finite budget.
Everything downstream only ever asks for partial quotients, so order
decisions against rationals and signs of a + b*theta are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


class StreamExhausted(RuntimeError):
    """The quotient source ran out before the decision was reached."""


class ThetaOutOfRange(ValueError):
    pass


class DIsPerfectSquare(ValueError):
    pass


class CfNumber:
    """An irrational in (0,1) presented by its partial quotients.

    Quotients are indexed from 0 with a0 = 0; they are produced lazily
    and cached.  `consumed` reports how many have been materialized,
    which is the cost measure for the polytime-behavior audits.
    """

    def __init__(self, generator, description: str, budget: int | None = None):
        self._quots = [0]
        self._gen = generator
        self.description = description
        self.budget = budget

    def __repr__(self):
        return f"CfNumber({self.description})"

    @classmethod
    def periodic(cls, preperiod, period, description=None):
        pre = [int(a) for a in preperiod]
        per = [int(a) for a in period]
        if not per:
            raise ValueError("period must be nonempty (theta is irrational)")
        if any(a < 1 for a in pre + per):
            raise ValueError("partial quotients must be >= 1")

        def gen():
            yield from pre
            while True:
                yield from per

        if description is None:
            description = f"cf:{','.join(map(str, pre))};{','.join(map(str, per))}"
        return cls(gen(), description)

    @classmethod
    def golden(cls):
        """theta = (sqrt(5)-1)/2 = [0; 1, 1, 1, ...]."""
        return cls.periodic([], [1], "golden")

    @classmethod
    def inv_e(cls):
        """theta = 1/e = [0; 2, 1,2,1, 1,4,1, 1,6,1, ...]."""

        def gen():
            yield 2
            for k in itertools.count(1):
                yield 1
                yield 2 * k
                yield 1

        return cls(gen(), "inv-e")

    @classmethod
    def from_stream(cls, quotients, budget=None, description="stream"):
        qs = [int(a) for a in quotients]
        if any(a < 1 for a in qs):
            raise ValueError("partial quotients must be >= 1")
        if budget is None:
            budget = len(qs)
        return cls(iter(qs), description, budget=min(budget, len(qs)))

    def partial_quotient(self, k: int) -> int:
        """a_k, materializing the cache as needed."""
        if k < 0:
            raise IndexError("quotient index must be >= 0")
        while len(self._quots) <= k:
            if self.budget is not None and len(self._quots) > self.budget:
                raise StreamExhausted(
                    f"needed quotient a_{k}, budget is {self.budget}")
            try:
                a = next(self._gen)
            except StopIteration:
                raise StreamExhausted(
                    f"needed quotient a_{k}, stream ended at "
                    f"a_{len(self._quots) - 1}") from None
            if a < 1:
                raise ValueError("partial quotients must be >= 1")
            self._quots.append(a)
        return self._quots[k]

    @property
    def consumed(self) -> int:
        """Number of quotients materialized beyond a0."""
        return len(self._quots) - 1


# ---------------------------------------------------------------------------
# quadratic surds

def _floor_surd(P: int, D: int, Q: int) -> int:
    """floor((P + sqrt(D)) / Q) for nonsquare D > 0, Q != 0."""
    s = isqrt(D)  # floor(sqrt(D)); sqrt(D) irrational
    num = P + s  # floor(P + sqrt(D))
    if Q > 0:
        return num // Q
    # (P + sqrt(D))/Q is never an integer, so ceil = floor + 1
    return -(num // -Q) - 1


def cf_from_surd(P: int, D: int, Q: int) -> CfNumber:
    """Periodic expansion of theta = (P + sqrt(D)) / Q in (0,1)."""
    if Q == 0:
        raise ValueError("Q must be nonzero")
    if D <= 0 or isqrt(D) ** 2 == D:
        raise DIsPerfectSquare(f"D = {D} is not a positive nonsquare")
    if _floor_surd(P, D, Q) != 0:
        raise ThetaOutOfRange(f"({P}+sqrt({D}))/{Q} is not in (0,1)")
    if (D - P * P) % Q != 0:
        # scale so that Q | D - P^2, leaving theta unchanged
        P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)

    quots = []
    seen: dict[tuple[int, int], int] = {}
    while True:
        key = (P, Q)
        if key in seen:
            start = seen[key]
            pre, per = quots[1:start], quots[start:]
            return CfNumber.periodic(
                pre, per, description=f"surd:({P},{D},{Q})")
        seen[key] = len(quots)
        a = _floor_surd(P, D, Q)
        quots.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q


def sqrt2_minus_1() -> CfNumber:
    return cf_from_surd(-1, 2, 1)


# ---------------------------------------------------------------------------
# convergents

@dataclass(frozen=True)
class Convergent:
    p: int
    q: int
    index: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)


def convergent(theta: CfNumber, k: int) -> Convergent:
    """k-th convergent p_k/q_k of theta."""
    p_prev, p = 1, theta.partial_quotient(0)
    q_prev, q = 0, 1
    for i in range(1, k + 1):
        a = theta.partial_quotient(i)
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    return Convergent(p, q, k)


# ---------------------------------------------------------------------------
# comparisons

def _rational_cf(r: Fraction) -> list[int]:
    """Finite expansion of r in (0,1), normalized so the last quotient is >= 2."""
    quots = [0]
    p, q = r.numerator, r.denominator
    # expand q/p, p/q', ... by the euclidean algorithm
    num, den = q, p
    while den:
        a, rem = divmod(num, den)
        quots.append(a)
        num, den = den, rem
    if len(quots) > 2 and quots[-1] == 1:
        quots.pop()
        quots[-1] += 1
    return quots


def compare_rational(theta: CfNumber, r) -> int:
    """-1 if theta < r, +1 if theta > r (never equal: theta is irrational).

    Digitwise comparison of expansions: at the first differing index a
    larger quotient means a larger number in even positions and a
    smaller number in odd positions; the end of the finite expansion of
    r acts as an infinite quotient.
    """
    r = Fraction(r)
    if not 0 <= r <= 1:
        raise ValueError(f"rational {r} not in [0,1]")
    if r == 0:
        return 1
    if r == 1:
        return -1
    digits = _rational_cf(r)
    for i in itertools.count():
        if i == len(digits):
            # r's next digit is +infinity, so r is larger there
            return -1 if i % 2 == 0 else 1
        a = theta.partial_quotient(i)
        b = digits[i]
        if a != b:
            bigger = a > b
            return (1 if bigger else -1) if i % 2 == 0 else (-1 if bigger else 1)
    raise AssertionError("unreachable")


def sign_a_plus_b_theta(a: int, b: int, theta: CfNumber) -> int:
    """Sign of a + b*theta: -1, 0, or +1.  Zero only for a = b = 0."""
    if b == 0:
        return (a > 0) - (a < 0)
    r = Fraction(-a, b)
    if r <= 0:
        cmp = 1  # theta > r
    elif r >= 1:
        cmp = -1  # theta < r
    else:
        cmp = compare_rational(theta, r)
    return cmp if b > 0 else -cmp
