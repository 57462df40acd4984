"""Concrete algebra backends.

Each backend realizes the unit interval of a totally ordered unital
group with exact integer arithmetic, exposing the operations the
decision engine folds terms with:

  * Chain(k): {0, 1/k, ..., 1} as integers 0..k with unit k;
  * BehnckeLeptin(m, n): Z x_lex Z with unit (m, n);
  * EffrosShen(theta): Z + theta*Z with unit 1, pairs (a, b) = a + b*theta,
    ordered through the continued-fraction comparator;
  * Free(n): the free algebra, whose elements are exact piecewise-linear
    functions (see the pwl module).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import pwl
from .cf import CfNumber, sign_a_plus_b_theta
from .terms import Term, Zero, Var, Neg, Oplus


class BackendMismatch(ValueError):
    pass


class UnassignedVariable(KeyError):
    pass


class ElementOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class GammaElement:
    """An element of the unit interval of a chain backend.

    coords is (j,) for Chain and (a, b) for the two-coordinate backends.
    """

    backend: object
    coords: tuple

    def __repr__(self):
        if len(self.coords) == 1:
            return f"<{self.coords[0]} in {self.backend}>"
        return f"<{self.coords} in {self.backend}>"


class _ChainLikeBackend:
    """Shared machinery: truncated addition and order via a comparator."""

    def element(self, *coords) -> GammaElement:
        coords = tuple(int(c) for c in coords)
        if self._cmp_raw(coords, self._zero_coords()) < 0 or \
           self._cmp_raw(coords, self._unit_coords()) > 0:
            raise ElementOutOfRange(f"{coords} outside [0, u] in {self}")
        return GammaElement(self, coords)

    def zero(self) -> GammaElement:
        return GammaElement(self, self._zero_coords())

    def one(self) -> GammaElement:
        return GammaElement(self, self._unit_coords())

    def _check(self, x: GammaElement):
        if x.backend is not self and x.backend != self:
            raise BackendMismatch(f"element of {x.backend} used with {self}")

    def cmp(self, x: GammaElement, y: GammaElement) -> int:
        self._check(x)
        self._check(y)
        return self._cmp_raw(x.coords, y.coords)

    def oplus(self, x: GammaElement, y: GammaElement) -> GammaElement:
        self._check(x)
        self._check(y)
        s = tuple(a + b for a, b in zip(x.coords, y.coords))
        u = self._unit_coords()
        return GammaElement(self, u if self._cmp_raw(s, u) >= 0 else s)

    def neg(self, x: GammaElement) -> GammaElement:
        self._check(x)
        return GammaElement(self, tuple(u - a
                                        for u, a in zip(self._unit_coords(),
                                                        x.coords)))

    def leq(self, x: GammaElement, y: GammaElement) -> bool:
        return self.cmp(x, y) <= 0

    def is_zero(self, x: GammaElement) -> bool:
        self._check(x)
        return x.coords == self._zero_coords()

    def is_one(self, x: GammaElement) -> bool:
        self._check(x)
        return x.coords == self._unit_coords()

    def join(self, x: GammaElement, y: GammaElement) -> GammaElement:
        return y if self.cmp(x, y) <= 0 else x

    def meet(self, x: GammaElement, y: GammaElement) -> GammaElement:
        return x if self.cmp(x, y) <= 0 else y

    def default_assignment(self) -> dict:
        return {}

    def interpret(self, phi: Term, assignment: dict | None = None) -> GammaElement:
        asg = dict(self.default_assignment())
        if assignment:
            asg.update(assignment)

        def go(t):
            if isinstance(t, Zero):
                return self.zero()
            if isinstance(t, Var):
                try:
                    x = asg[t.index]
                except KeyError:
                    raise UnassignedVariable(
                        f"X{t.index} has no value in {self}") from None
                self._check(x)
                return x
            if isinstance(t, Neg):
                return self.neg(go(t.arg))
            if isinstance(t, Oplus):
                return self.oplus(go(t.left), go(t.right))
            raise TypeError(f"not a Term: {t!r}")

        return go(phi)


@dataclass(frozen=True)
class ChainBackend(_ChainLikeBackend):
    """The finite chain with k+1 elements 0, 1/k, ..., 1."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("chain parameter k must be >= 1")

    def __str__(self):
        return f"chain:{self.k}"

    def _zero_coords(self):
        return (0,)

    def _unit_coords(self):
        return (self.k,)

    @staticmethod
    def _cmp_raw(x, y):
        return (x[0] > y[0]) - (x[0] < y[0])

    def elements(self):
        return [GammaElement(self, (j,)) for j in range(self.k + 1)]


@dataclass(frozen=True)
class BehnckeLeptinBackend(_ChainLikeBackend):
    """Unit interval of Z x_lex Z with unit (m, n).

    This lexicographic chain is our model of the Elliott monoid of the
    two-ideal-point algebras; the backend is plain integer arithmetic,
    so any other lexicographic unit plugs in the same way.
    """

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("unit coordinates must be positive")

    def __str__(self):
        return f"behncke-leptin:{self.m},{self.n}"

    def _zero_coords(self):
        return (0, 0)

    def _unit_coords(self):
        return (self.m, self.n)

    @staticmethod
    def _cmp_raw(x, y):
        if x[0] != y[0]:
            return 1 if x[0] > y[0] else -1
        return (x[1] > y[1]) - (x[1] < y[1])


@dataclass(eq=False)
class EffrosShenBackend(_ChainLikeBackend):
    """Unit interval of Z + theta*Z with unit 1; (a, b) means a + b*theta."""

    theta: CfNumber
    label: str = field(default="effros-shen")

    def __str__(self):
        return f"{self.label}({self.theta.description})"

    def _zero_coords(self):
        return (0, 0)

    def _unit_coords(self):
        return (1, 0)

    def _cmp_raw(self, x, y):
        return sign_a_plus_b_theta(x[0] - y[0], x[1] - y[1], self.theta)

    def default_assignment(self):
        # the canonical quotient generator: X1 |-> theta
        return {1: GammaElement(self, (0, 1))}


@dataclass(frozen=True)
class FreeBackend:
    """The free algebra on n generators; elements are McNaughton functions."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension n must be >= 1")

    def __str__(self):
        return f"free:{self.n}"

    def interpret(self, phi: Term, assignment=None,
                  cell_budget: int = pwl.DEFAULT_CELL_BUDGET):
        # the assignment is implicit: X_i |-> the i-th coordinate
        return pwl.interpret_free(phi, self.n, cell_budget)


# ---------------------------------------------------------------------------
# assignment files: lines "X<i> = <literal>"

_ES_LITERAL = re.compile(
    r"^\s*(?:(?P<a>[+-]?\d+)\s*)?"
    r"(?:(?P<sign>[+-])?\s*(?:(?P<b>\d+)\s*\*\s*)?theta)?\s*$")


def parse_assignment(text: str, backend) -> dict:
    """Parse an assignment file body for a chain-like backend.

    Literal syntax: Chain "j"; BehnckeLeptin "(a,b)"; EffrosShen
    "a+b*theta" with integer a, b (either part may be omitted).
    """
    asg = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.match(r"^[Xx](\d+)\s*=\s*(.+)$", line)
        if not m:
            raise ValueError(f"line {lineno}: expected 'X<i> = <literal>'")
        index = int(m.group(1))
        if index < 1:
            raise ValueError(f"line {lineno}: variable index must be >= 1")
        asg[index] = _parse_literal(m.group(2).strip(), backend, lineno)
    return asg


def _parse_literal(lit, backend, lineno):
    if isinstance(backend, ChainBackend):
        try:
            return backend.element(int(lit))
        except ValueError as e:
            raise ValueError(f"line {lineno}: {e}") from None
    if isinstance(backend, BehnckeLeptinBackend):
        m = re.match(r"^\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)$", lit)
        if not m:
            raise ValueError(f"line {lineno}: expected '(a,b)', got {lit!r}")
        return backend.element(int(m.group(1)), int(m.group(2)))
    if isinstance(backend, EffrosShenBackend):
        m = _ES_LITERAL.match(lit)
        if not m or (m.group("a") is None and "theta" not in lit):
            raise ValueError(f"line {lineno}: expected 'a+b*theta', got {lit!r}")
        a = int(m.group("a") or 0)
        if "theta" in lit:
            b = int(m.group("b") or 1)
            if m.group("sign") == "-":
                b = -b
        else:
            b = 0
        return backend.element(a, b)
    raise ValueError(f"assignments do not apply to backend {backend}")
