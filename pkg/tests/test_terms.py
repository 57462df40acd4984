import pytest
from hypothesis import given, strategies as st

from mvdecide import terms as tm
from mvdecide.terms import (ZERO, Zero, Var, Neg, Oplus, parse, render, size,
                            max_var, one, times, minus, join, meet, dist,
                            reduce_order, reduce_word, reduce_eccentricity,
                            reduce_central, reduce_rho)

from conftest import mv_eval, farey_fractions


# ---------------------------------------------------------------------------
# parsing

def test_parse_examples():
    assert parse("(X1+X1*)") == Oplus(Var(1), Neg(Var(1)))
    assert parse("0*") == Neg(ZERO)
    assert parse("X3") == Var(3)
    assert parse("1") == Neg(ZERO)
    assert parse(" ( X1 + 0 ) ") == Oplus(Var(1), ZERO)


def test_parse_desugars_derived_operators():
    assert parse("(X1-X2)") == minus(Var(1), Var(2))
    assert parse("(X1.X2)") == times(Var(1), Var(2))
    assert parse("(X1|X2)") == join(Var(1), Var(2))
    assert parse("(X1&X2)") == meet(Var(1), Var(2))


def test_parse_error_unbalanced():
    with pytest.raises(tm.UnbalancedParenthesis) as ei:
        parse("((X1+X2)")
    assert ei.value.position == 0
    with pytest.raises(tm.UnbalancedParenthesis):
        parse("X1)")
    with pytest.raises(tm.UnbalancedParenthesis):
        parse("(X1+")


def test_parse_error_unknown_symbol():
    with pytest.raises(tm.UnknownSymbol) as ei:
        parse("(X1 ? X2)")
    assert ei.value.position == 4


def test_parse_error_malformed_variable():
    with pytest.raises(tm.MalformedVariable):
        parse("X")
    with pytest.raises(tm.MalformedVariable):
        parse("X0")


def test_parse_error_empty():
    with pytest.raises(tm.EmptyInput):
        parse("")
    with pytest.raises(tm.EmptyInput):
        parse("   ")


# ---------------------------------------------------------------------------
# rendering and size

def test_render_examples():
    assert render(Oplus(Var(1), ZERO)) == "(X1+0)"
    assert render(Neg(Neg(ZERO))) == "0**"
    assert render(Var(3)) == "X3"


def test_size_examples():
    assert size(ZERO) == 1
    assert size(parse("(X1+X2)")) == 5
    assert size(parse("X1*")) == 2


def test_size_counts_rendered_symbols():
    t = parse("((X12+0)*&X3)")
    s = render(t)
    symbols = sum(1 for c in s if c in "0+*()X")
    assert size(t) == symbols


_term_strategy = st.recursive(
    st.just(ZERO) | st.integers(1, 9).map(Var),
    lambda sub: sub.map(Neg) | st.tuples(sub, sub).map(lambda ab: Oplus(*ab)),
    max_leaves=40)


@given(_term_strategy)
def test_parse_render_roundtrip(t):
    assert parse(render(t)) == t


# ---------------------------------------------------------------------------
# derived connectives

def test_minus_expansion():
    assert render(minus(Var(1), Var(2))) == "(X1*+X2)*"


def test_meet_expansion_is_core_syntax():
    def core_only(t):
        if isinstance(t, (Zero, Var)):
            return True
        if isinstance(t, Neg):
            return core_only(t.arg)
        if isinstance(t, Oplus):
            return core_only(t.left) and core_only(t.right)
        return False

    for t in [one(), times(Var(1), Var(2)), meet(Var(1), Var(2)),
              join(Var(1), Var(2)), dist(Var(1), Var(2)),
              reduce_eccentricity(Var(1), Var(2)), reduce_rho(Var(1), 2)]:
        assert core_only(t)


def test_dist_with_itself_is_zero():
    t = dist(Var(1), Var(1))
    for x in farey_fractions(6):
        assert mv_eval(t, (x,)) == 0


def test_connective_semantics_on_grid():
    x1 = Var(1)
    x2 = Var(2)
    pts = farey_fractions(4)
    for a in pts:
        for b in pts:
            assert mv_eval(times(x1, x2), (a, b)) == max(0, a + b - 1)
            assert mv_eval(minus(x1, x2), (a, b)) == max(0, a - b)
            assert mv_eval(join(x1, x2), (a, b)) == max(a, b)
            assert mv_eval(meet(x1, x2), (a, b)) == min(a, b)
            assert mv_eval(dist(x1, x2), (a, b)) == abs(a - b)


# ---------------------------------------------------------------------------
# reductions

def test_reduce_order_examples():
    assert reduce_order(Var(1), one()) == minus(Var(1), one())
    t = reduce_order(Var(1), Var(1))
    for x in farey_fractions(6):
        assert mv_eval(t, (x,)) == 0


def test_reduce_order_refutable():
    t = reduce_order(one(), Var(1))
    # 1 - x is nonzero anywhere below 1
    nonzero = [x for x in farey_fractions(8) if mv_eval(t, (x,)) != 0]
    assert nonzero and all(x < 1 for x in nonzero)


def test_reduce_word_examples():
    t = reduce_word(Var(1), Var(1))
    for x in farey_fractions(6):
        assert mv_eval(t, (x,)) == 0
    lhs = parse("((X1*+X2)*+X2)")
    rhs = parse("((X2*+X1)*+X1)")
    t = reduce_word(lhs, rhs)
    for a in farey_fractions(5):
        for b in farey_fractions(5):
            assert mv_eval(t, (a, b)) == 0


def test_reduce_word_witness():
    t = reduce_word(Var(1), Oplus(Var(1), Var(1)))
    assert mv_eval(t, (0.25,)) == 0.25  # min(1, 2x) - x at 1/4


def test_reduce_eccentricity_reflexive():
    # a below-or-equal-to a in the centrality order, on a dense 1-d grid
    for alpha in [Var(1), Neg(Var(1)), Oplus(Var(1), Var(1)), ZERO, one()]:
        t = reduce_eccentricity(alpha, alpha)
        for x in farey_fractions(8):
            assert mv_eval(t, (x,)) == 0


def test_reduce_eccentricity_one_vs_x():
    # 1 against X1 fails on the half of the interval where x < x*
    t = reduce_eccentricity(one(), Var(1))
    for x in farey_fractions(8):
        val = mv_eval(t, (x,))
        assert (val != 0) == (x < 0.5)


def test_reduce_central_examples():
    for phi in [ZERO, one()]:
        t = reduce_central(phi)
        for x in farey_fractions(4):
            assert mv_eval(t, (x,)) == 0
    t = reduce_central(Var(1))
    assert mv_eval(t, (0.5,)) == 0.5


def test_reduce_rho_shape():
    t = reduce_rho(Var(1), 1)
    assert t == meet(Var(1), meet(Var(1), Neg(Var(1))))
    t0 = reduce_rho(ZERO, 1)
    for x in farey_fractions(6):
        assert mv_eval(t0, (x,)) == 0


def test_reduce_rho_rejects_small_n():
    with pytest.raises(tm.VariableIndexExceedsN):
        reduce_rho(Var(3), 2)
    with pytest.raises(tm.VariableIndexExceedsN):
        reduce_rho(ZERO, 0)


def test_reduction_size_linear_bounds(rng):
    from conftest import random_term
    for _ in range(50):
        phi = random_term(rng, 2, rng.randint(1, 30))
        psi = random_term(rng, 2, rng.randint(1, 30))
        sp, sq = size(phi), size(psi)
        assert size(reduce_order(phi, psi)) <= sp + sq + 5
        assert size(reduce_word(phi, psi)) <= 2 * (sp + sq) + 13
        assert size(reduce_eccentricity(phi, psi)) <= 6 * sp + 12 * sq + 90
        assert size(reduce_central(phi)) <= 3 * sp + 15
        n = max(1, max_var(phi))
        assert size(reduce_rho(phi, n)) <= sp + 84 * n + 30


def test_max_var():
    assert max_var(ZERO) == 0
    assert max_var(parse("((X2+X7*)&X1)")) == 7
