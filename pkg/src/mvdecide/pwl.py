"""Exact McNaughton functions over the unit cube.

A term interpreted in the free algebra on n generators is a continuous
piecewise-linear function [0,1]^n -> [0,1] whose pieces have integer
coefficients.  We keep an exact cell complex: convex cells carrying an
affine form, with both a vertex list (for the zero test) and the
half-space cuts that produced the cell (for point location).  All
arithmetic is exact rational.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .terms import Term, Zero, Var, Neg, Oplus, VariableIndexExceedsN

DEFAULT_CELL_BUDGET = 10 ** 6

Point = tuple  # tuple of Fraction


class DimensionMismatch(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


class PointOutOfCube(ValueError):
    pass


class CellBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class AffineForm:
    """constant + sum(coeffs[i] * x[i]) with integer coefficients."""

    constant: int
    coeffs: tuple

    def eval(self, p: Point) -> Fraction:
        return Fraction(self.constant) + sum(c * x for c, x in zip(self.coeffs, p))

    def add(self, other: "AffineForm") -> "AffineForm":
        return AffineForm(self.constant + other.constant,
                          tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def complement(self) -> "AffineForm":
        return AffineForm(1 - self.constant, tuple(-c for c in self.coeffs))


# A halfspace is (coeffs, bound) meaning sum(coeffs[i]*x[i]) <= bound.

@dataclass(frozen=True)
class Cell:
    vertices: tuple  # tuple of Points
    halfspaces: tuple  # tuple of halfspaces
    form: AffineForm


@dataclass(frozen=True)
class PwlComplex:
    dimension: int
    cells: tuple


# ---------------------------------------------------------------------------
# polytope helpers

def _clip(vertices, coeffs, bound):
    """Vertices of the intersection of conv(vertices) with dot<=bound."""
    vals = [sum(c * x for c, x in zip(coeffs, v)) - bound for v in vertices]
    if all(v <= 0 for v in vals):
        return list(vertices)
    inside = [v for v, d in zip(vertices, vals) if d <= 0]
    if not inside:
        return []
    out = {tuple(v) for v in inside}
    for (u, du), (w, dw) in itertools.combinations(zip(vertices, vals), 2):
        if (du < 0 < dw) or (dw < 0 < du):
            t = du / (du - dw)
            out.add(tuple(a + t * (b - a) for a, b in zip(u, w)))
    return [tuple(p) for p in out]


def _affine_rank(points):
    if len(points) < 2:
        return 0
    base = points[0]
    rows = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    rank = 0
    ncols = len(base)
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
        r += 1
        col += 1
    return rank


def _full_dim(vertices, n):
    return len(vertices) >= n + 1 and _affine_rank(vertices) == n


def _cube_data(n):
    vertices = tuple(tuple(Fraction(b) for b in bits)
                     for bits in itertools.product((0, 1), repeat=n))
    halfspaces = []
    for i in range(n):
        lo = tuple(-1 if j == i else 0 for j in range(n))
        hi = tuple(1 if j == i else 0 for j in range(n))
        halfspaces.append((lo, 0))
        halfspaces.append((hi, 1))
    return vertices, tuple(halfspaces)


def constant(n: int, value: int) -> PwlComplex:
    """The constant-0 or constant-1 function on [0,1]^n."""
    if value not in (0, 1):
        raise ValueError("constant must be 0 or 1")
    vs, hs = _cube_data(n)
    return PwlComplex(n, (Cell(vs, hs, AffineForm(value, (0,) * n)),))


def coordinate(i: int, n: int) -> PwlComplex:
    """The i-th coordinate projection on [0,1]^n (1-based index)."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"coordinate {i} out of range for dimension {n}")
    vs, hs = _cube_data(n)
    coeffs = tuple(1 if j == i - 1 else 0 for j in range(n))
    return PwlComplex(n, (Cell(vs, hs, AffineForm(0, coeffs)),))


def neg(f: PwlComplex) -> PwlComplex:
    """Pointwise 1 - f, on the same cells."""
    return PwlComplex(f.dimension,
                      tuple(Cell(c.vertices, c.halfspaces, c.form.complement())
                            for c in f.cells))


# ---------------------------------------------------------------------------
# truncated addition

class _Counter:
    __slots__ = ("built", "budget")

    def __init__(self, budget):
        self.built = 0
        self.budget = budget

    def tick(self, k=1):
        self.built += k
        if self.built > self.budget:
            raise CellBudgetExceeded(f"cell budget {self.budget} exceeded")


def oplus(f: PwlComplex, g: PwlComplex,
          cell_budget: int = DEFAULT_CELL_BUDGET) -> PwlComplex:
    """Pointwise min(1, f+g) on the common refinement of the two complexes."""
    counter = _Counter(cell_budget)
    return _oplus(f, g, counter)


def _oplus(f, g, counter):
    if f.dimension != g.dimension:
        raise DimensionMismatch(f"{f.dimension} vs {g.dimension}")
    if f.dimension == 1:
        return _oplus_1d(f, g, counter)
    n = f.dimension
    cells = []
    for cf in f.cells:
        for cg in g.cells:
            verts = list(cf.vertices)
            for hs in cg.halfspaces:
                verts = _clip(verts, *hs)
                if not verts:
                    break
            if not _full_dim(verts, n):
                continue
            halfspaces = cf.halfspaces + tuple(
                h for h in cg.halfspaces if h not in cf.halfspaces)
            s = cf.form.add(cg.form)
            cells.extend(_cap_at_one(verts, halfspaces, s, n, counter))
    return PwlComplex(n, tuple(cells))


def _cap_at_one(verts, halfspaces, s, n, counter):
    vals = [s.eval(v) for v in verts]
    if all(v <= 1 for v in vals):
        counter.tick()
        return [Cell(tuple(verts), halfspaces, s)]
    if all(v >= 1 for v in vals):
        counter.tick()
        return [Cell(tuple(verts), halfspaces, AffineForm(1, (0,) * n))]
    below = (s.coeffs, 1 - s.constant)
    above = (tuple(-c for c in s.coeffs), s.constant - 1)
    out = []
    bverts = _clip(verts, *below)
    if _full_dim(bverts, n):
        counter.tick()
        out.append(Cell(tuple(bverts), halfspaces + (below,), s))
    averts = _clip(verts, *above)
    if _full_dim(averts, n):
        counter.tick()
        out.append(Cell(tuple(averts), halfspaces + (above,),
                        AffineForm(1, (0,) * n)))
    return out


def _interval_cells(f):
    """Cells of a 1-d complex as (left, right, form), sorted."""
    out = []
    for c in f.cells:
        xs = [v[0] for v in c.vertices]
        out.append((min(xs), max(xs), c.form))
    out.sort(key=lambda t: t[0])
    return out


def _interval_cell(a, b, form):
    return Cell(((a,), (b,)), (((-1,), -a), ((1,), b)), form)


def _oplus_1d(f, g, counter):
    fcells = _interval_cells(f)
    gcells = _interval_cells(g)
    bps = sorted({x for a, b, _ in fcells for x in (a, b)} |
                 {x for a, b, _ in gcells for x in (a, b)})
    cells = []
    fi = gi = 0
    for a, b in zip(bps, bps[1:]):
        while fcells[fi][1] <= a and fi + 1 < len(fcells):
            fi += 1
        while gcells[gi][1] <= a and gi + 1 < len(gcells):
            gi += 1
        s = fcells[fi][2].add(gcells[gi][2])
        va, vb = s.eval((a,)), s.eval((b,))
        if va <= 1 and vb <= 1:
            counter.tick()
            cells.append(_interval_cell(a, b, s))
        elif va >= 1 and vb >= 1:
            counter.tick()
            cells.append(_interval_cell(a, b, AffineForm(1, (0,))))
        else:
            # the line s crosses height 1 strictly inside (a, b)
            x = Fraction(1 - s.constant, s.coeffs[0])
            lo_form, hi_form = (s, AffineForm(1, (0,))) if va < 1 else \
                               (AffineForm(1, (0,)), s)
            counter.tick(2)
            cells.append(_interval_cell(a, x, lo_form))
            cells.append(_interval_cell(x, b, hi_form))
    return PwlComplex(1, tuple(cells))


# ---------------------------------------------------------------------------
# interpretation and queries

def interpret_free(phi: Term, n: int,
                   cell_budget: int = DEFAULT_CELL_BUDGET) -> PwlComplex:
    """The McNaughton function coded by phi on [0,1]^n."""
    f, _ = interpret_free_counted(phi, n, cell_budget)
    return f


def interpret_free_counted(phi: Term, n: int,
                           cell_budget: int = DEFAULT_CELL_BUDGET):
    """As interpret_free, but also reports how many cells were built."""
    counter = _Counter(cell_budget)

    def go(t):
        if isinstance(t, Zero):
            return constant(n, 0)
        if isinstance(t, Var):
            if t.index > n:
                raise VariableIndexExceedsN(
                    f"X{t.index} does not fit in dimension {n}")
            return coordinate(t.index, n)
        if isinstance(t, Neg):
            return neg(go(t.arg))
        if isinstance(t, Oplus):
            return _oplus(go(t.left), go(t.right), counter)
        raise TypeError(f"not a Term: {t!r}")

    return go(phi), counter.built


def eval_at(f: PwlComplex, p) -> Fraction:
    """Value of the represented function at a rational point of the cube."""
    p = tuple(Fraction(x) for x in p)
    if len(p) != f.dimension:
        raise DimensionMismatch(f"point has {len(p)} coordinates, "
                                f"complex has dimension {f.dimension}")
    if any(x < 0 or x > 1 for x in p):
        raise PointOutOfCube(f"{p} not in the unit cube")
    for c in f.cells:
        if all(sum(a * x for a, x in zip(coeffs, p)) <= bound
               for coeffs, bound in c.halfspaces):
            return c.form.eval(p)
    raise RuntimeError("cell coverage violated (internal error)")


def is_zero(f: PwlComplex):
    """(True, None) if f is identically zero, else (False, (point, value)).

    Forms are affine on convex cells, so checking all cell vertices is a
    complete test; a nonzero vertex is the witness.
    """
    for c in f.cells:
        for v in c.vertices:
            val = c.form.eval(v)
            if val != 0:
                return False, (v, val)
    return True, None


def is_one(f: PwlComplex):
    """(True, None) if f is identically one, else (False, (point, value))."""
    z, wit = is_zero(neg(f))
    if z:
        return True, None
    p, val = wit
    return False, (p, 1 - val)


def nontrivial_witness(f: PwlComplex):
    """A point where 0 < f < 1, or None if f is constant 0 or constant 1.

    A continuous function on the cube misses (0,1) everywhere only if it
    is constant; so if some cell mixes vertex values 0 and 1, the
    midpoint of such a pair works.
    """
    for c in f.cells:
        for v in c.vertices:
            val = c.form.eval(v)
            if 0 < val < 1:
                return v, val
    for c in f.cells:
        vals = [(v, c.form.eval(v)) for v in c.vertices]
        zeros = [v for v, val in vals if val == 0]
        ones = [v for v, val in vals if val == 1]
        if zeros and ones:
            mid = tuple((a + b) / 2 for a, b in zip(zeros[0], ones[0]))
            return mid, c.form.eval(mid)
    return None


# ---------------------------------------------------------------------------
# comparisons used by the backend contract

def _intersection_vertices(c1, c2, n):
    verts = list(c1.vertices)
    for hs in c2.halfspaces:
        verts = _clip(verts, *hs)
        if not verts:
            return None
    if not _full_dim(verts, n):
        return None
    return verts


def equal(f: PwlComplex, g: PwlComplex) -> bool:
    """Do f and g represent the same function?

    On a full-dimensional intersection two affine forms agree iff they
    are identical, so no refinement needs to be materialized.
    """
    if f.dimension != g.dimension:
        raise DimensionMismatch(f"{f.dimension} vs {g.dimension}")
    n = f.dimension
    for c1 in f.cells:
        for c2 in g.cells:
            if c1.form == c2.form:
                continue
            if _intersection_vertices(c1, c2, n) is not None:
                return False
    return True


def leq(f: PwlComplex, g: PwlComplex) -> bool:
    """Pointwise f <= g over the whole cube."""
    if f.dimension != g.dimension:
        raise DimensionMismatch(f"{f.dimension} vs {g.dimension}")
    n = f.dimension
    for c1 in f.cells:
        for c2 in g.cells:
            verts = _intersection_vertices(c1, c2, n)
            if verts is None:
                continue
            for v in verts:
                if c1.form.eval(v) > c2.form.eval(v):
                    return False
    return True


def max_vertex_denominator(f: PwlComplex) -> int:
    """Largest denominator among all cell vertex coordinates."""
    d = 1
    for c in f.cells:
        for v in c.vertices:
            for x in v:
                if x.denominator > d:
                    d = x.denominator
    return d


def dump(f: PwlComplex) -> str:
    """Debug listing: one cell per line, vertices then the affine form."""
    lines = []
    for c in f.cells:
        vs = " ".join("(" + ",".join(str(x) for x in v) + ")"
                      for v in sorted(c.vertices))
        terms = [str(c.form.constant)] + [
            f"{a:+d}*x{i + 1}" for i, a in enumerate(c.form.coeffs) if a]
        lines.append(f"{vs}  ->  {' '.join(terms)}")
    return "\n".join(lines)
