"""Lukasiewicz term syntax.

Abstract syntax trees over the core signature {0, *, +} with variables
X1, X2, ..., a parser for a small surface grammar with derived-operator
sugar, a canonical renderer, symbol counting, and the term transformers
that reduce the word/order/eccentricity/centrality problems to the zero
problem (and back).
"""

from __future__ import annotations

from dataclasses import dataclass


class TermSyntaxError(ValueError):
    """A string is not a well-formed term.  Carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EmptyInput(TermSyntaxError):
    pass


class UnknownSymbol(TermSyntaxError):
    pass


class MalformedVariable(TermSyntaxError):
    pass


class UnbalancedParenthesis(TermSyntaxError):
    pass


class VariableIndexExceedsN(ValueError):
    pass


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Var(Term):
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("variable index must be >= 1")


@dataclass(frozen=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True)
class Oplus(Term):
    left: Term
    right: Term


ZERO = Zero()


# ---------------------------------------------------------------------------
# derived connectives, expanded into {0, *, +} immediately

def one() -> Term:
    return Neg(ZERO)


def times(a: Term, b: Term) -> Term:
    # a.b = (a* + b*)*
    return Neg(Oplus(Neg(a), Neg(b)))


def minus(a: Term, b: Term) -> Term:
    # a - b = a.(b*) = (a* + b)*
    return Neg(Oplus(Neg(a), b))


def join(a: Term, b: Term) -> Term:
    # a | b = (a* + b)* + b
    return Oplus(Neg(Oplus(Neg(a), b)), b)


def meet(a: Term, b: Term) -> Term:
    # a & b = (a* | b*)*
    return Neg(join(Neg(a), Neg(b)))


def dist(a: Term, b: Term) -> Term:
    # Chang distance ((a - b) + (b - a))
    return Oplus(minus(a, b), minus(b, a))


# ---------------------------------------------------------------------------
# parsing

_BINOPS = {
    "+": Oplus,
    ".": times,
    "-": minus,
    "|": join,
    "&": meet,
}


def _tokenize(text: str):
    tokens = []  # (kind, value, position)
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "01*()+.-|&":
            tokens.append((c, c, i))
            i += 1
            continue
        if c in "Xx":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise MalformedVariable("variable needs a decimal index", i)
            index = int(text[i + 1:j])
            if index < 1:
                raise MalformedVariable("variable index must be >= 1", i)
            tokens.append(("var", index, i))
            i = j
            continue
        raise UnknownSymbol(f"unexpected character {c!r}", i)
    return tokens


def parse(text: str) -> Term:
    """Parse the surface grammar into a core-syntax Term.

    Atoms 0, 1, X<digits>; postfix * binds tightest; binary operators
    + . - | & must be written parenthesized as (a OP b).  Derived
    operators are desugared on the spot.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise EmptyInput("no term given", 0)
    term, i = _parse_expr(tokens, 0, len(text))
    if i != len(tokens):
        kind, _, pos = tokens[i]
        if kind == ")":
            raise UnbalancedParenthesis("unmatched closing parenthesis", pos)
        raise UnknownSymbol("trailing input after term", pos)
    return term


def _parse_expr(tokens, i, end):
    term, i = _parse_operand(tokens, i, end)
    while i < len(tokens) and tokens[i][0] == "*":
        term = Neg(term)
        i += 1
    return term, i


def _parse_operand(tokens, i, end):
    if i >= len(tokens):
        raise UnbalancedParenthesis("unexpected end of input", end)
    kind, value, pos = tokens[i]
    if kind == "0":
        return ZERO, i + 1
    if kind == "1":
        return one(), i + 1
    if kind == "var":
        return Var(value), i + 1
    if kind == "(":
        left, j = _parse_expr(tokens, i + 1, end)
        if j >= len(tokens):
            raise UnbalancedParenthesis("missing closing parenthesis", pos)
        k2, _, p2 = tokens[j]
        if k2 == ")":
            return left, j + 1
        if k2 in _BINOPS:
            right, j = _parse_expr(tokens, j + 1, end)
            if j >= len(tokens) or tokens[j][0] != ")":
                raise UnbalancedParenthesis("missing closing parenthesis", pos)
            return _BINOPS[k2](left, right), j + 1
        raise UnknownSymbol("expected a binary operator or ')'", p2)
    if kind == ")":
        raise UnbalancedParenthesis("unmatched closing parenthesis", pos)
    raise UnknownSymbol(f"unexpected {kind!r}", pos)


# ---------------------------------------------------------------------------
# rendering and measuring

def render(t: Term) -> str:
    """Canonical fully parenthesized core-syntax string; parse(render(t)) == t."""
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Var):
        return f"X{t.index}"
    if isinstance(t, Neg):
        return render(t.arg) + "*"
    if isinstance(t, Oplus):
        return f"({render(t.left)}+{render(t.right)})"
    raise TypeError(f"not a Term: {t!r}")


def size(t: Term) -> int:
    """Symbol count of the canonical rendering.

    Each of 0, X_i, *, +, (, ) counts one; a variable counts one
    regardless of how many digits its index takes.
    """
    if isinstance(t, Zero) or isinstance(t, Var):
        return 1
    if isinstance(t, Neg):
        return size(t.arg) + 1
    if isinstance(t, Oplus):
        return size(t.left) + size(t.right) + 3
    raise TypeError(f"not a Term: {t!r}")


def max_var(t: Term) -> int:
    """Largest variable index occurring in t (0 if none)."""
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Var):
        return t.index
    if isinstance(t, Neg):
        return max_var(t.arg)
    if isinstance(t, Oplus):
        return max(max_var(t.left), max_var(t.right))
    raise TypeError(f"not a Term: {t!r}")


def variables(t: Term) -> set[int]:
    """Set of variable indices occurring in t."""
    out: set[int] = set()
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Var):
            out.add(s.index)
        elif isinstance(s, Neg):
            stack.append(s.arg)
        elif isinstance(s, Oplus):
            stack.append(s.left)
            stack.append(s.right)
    return out


# ---------------------------------------------------------------------------
# inter-problem reductions (each output is plain core syntax)

def reduce_order(phi: Term, psi: Term) -> Term:
    """Order-to-zero: phi <= psi holds iff the returned term is zero."""
    return minus(phi, psi)


def reduce_word(phi: Term, psi: Term) -> Term:
    """Word-to-zero: phi = psi holds iff the returned term is zero."""
    return dist(phi, psi)


def reduce_eccentricity(alpha: Term, beta: Term) -> Term:
    """Eccentricity-to-zero: alpha is below beta in the centrality order
    iff the returned term is zero."""
    b, bs = beta, Neg(beta)
    return meet(join(minus(b, bs), minus(alpha, b)),
                join(minus(bs, b), minus(b, alpha)))


def reduce_central(phi: Term) -> Term:
    """Central-to-zero: phi codes a central class iff (phi & phi*) is zero."""
    return meet(phi, Neg(phi))


def reduce_rho(phi: Term, n: int) -> Term:
    """Zero-to-central transformer: phi & (X1&X1* | ... | Xn&Xn*).

    Requires n >= max variable index of phi.  On algebras with no
    two-element quotient and a generating assignment, phi is zero iff
    the returned term codes a central class.
    """
    m = max_var(phi)
    if n < 1 or n < m:
        raise VariableIndexExceedsN(
            f"need n >= max variable index {m}, got {n}")
    acc = None
    for i in range(1, n + 1):
        piece = meet(Var(i), Neg(Var(i)))
        acc = piece if acc is None else join(acc, piece)
    return meet(phi, acc)
