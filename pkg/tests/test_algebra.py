from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from affp1.algebra import (
    ExactMatrix,
    FormatError,
    LaurentPoly,
    MobiusMap,
    MPoly,
    RationalMap,
    as_rational,
    format_rational,
    kernel,
    laurent_arith,
    laurent_band,
    laurent_from_json,
    laurent_to_json,
    poly_gcd,
    rank,
    squarefree_decomposition,
    substitute,
)

from conftest import laurent, nonzero_rationals, polynomials, rationals

U = LaurentPoly.monomial
x = sympy.Symbol("u")


def to_sympy(p: LaurentPoly):
    return sum((sympy.Rational(c.numerator, c.denominator) * x**e for e, c in p.items()), sympy.Integer(0))


def test_rationals_parse_and_format():
    assert as_rational("-6/4") == Fraction(-3, 2)
    assert format_rational(Fraction(3)) == "3/1"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    with pytest.raises(FormatError):
        as_rational("abc")
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_laurent_arith_examples():
    assert laurent_arith(U(1) + U(-1), -U(-1), "add") == U(1)
    for n in range(-4, 5):
        assert laurent_arith(U(-n), U(n), "mul") == LaurentPoly.const(1)
    t1, t2 = MPoly.var("t1"), MPoly.var("t2")
    p = LaurentPoly({2: t1, 1: t2})
    assert U(-3) * p == LaurentPoly({-1: t1, -2: t2})
    with pytest.raises(ValueError):
        laurent_arith(U(1), U(1, var="v"), "add")


def test_zero_coefficients_are_dropped():
    p = LaurentPoly({3: 0, 1: Fraction(2)})
    assert p.exponents() == [1]
    assert (p - p).is_zero() and not (p - p)


@given(laurent(), laurent(), laurent())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@given(laurent(), laurent())
def test_product_matches_convolution_oracle(p, q):
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0


@given(st.lists(st.tuples(st.integers(-5, 5), rationals), max_size=6), st.randoms())
def test_insertion_order_irrelevant(pairs, rnd):
    def build(ps):
        out = LaurentPoly()
        for e, c in ps:
            out = out + U(e, c)
        return out

    shuffled = list(pairs)
    rnd.shuffle(shuffled)
    assert build(pairs) == build(shuffled)


def test_band_examples():
    assert laurent_band(U(2) + U(-1) + U(-7), -4, -1) == U(-1)
    assert laurent_band(LaurentPoly(), -3, -1).is_zero()
    assert laurent_band(U(-2, 3) + U(0, 5), -2, -1) == U(-2, 3)
    with pytest.raises(ValueError):
        laurent_band(U(1), 2, 1)


def test_reflect_and_shift():
    p = U(2, 3) + U(-1)
    assert p.reflect("v") == U(-2, 3, "v") + U(1, 1, "v")
    assert p.shift(1) == U(3, 3) + LaurentPoly.const(1)
    assert p.derivative() == U(1, 6) - U(-2)


def test_mpoly_behaviour():
    t1, t2 = MPoly.var("t1"), MPoly.var("t2")
    e = (t1 + t2) ** 2 - t1 * t1 - t2 * t2
    assert e == 2 * t1 * t2
    assert (t1 * t2).subs({"t1": 3}) == 3 * t2
    assert (t1 - t1).is_zero()
    assert MPoly.const(5).constant_value() == 5


def test_substitute_examples():
    inv = MobiusMap.inversion()
    assert substitute(U(1), inv) == RationalMap(LaurentPoly.const(1), U(1))
    a = Fraction(3)
    r = substitute(U(2), MobiusMap(0, -a, 1, 0))
    assert r == RationalMap(LaurentPoly.const(a * a), U(2))
    m = MobiusMap(1, 1, 1, -1)
    r = substitute(U(1) + 1, m)
    assert r == RationalMap(U(1, 2), U(1) - 1)
    for pt in (2, 3, 5):
        assert r(Fraction(pt)) == m(Fraction(pt)) + 1


mobius = st.tuples(rationals, rationals, rationals, rationals).filter(
    lambda t: t[0] * t[3] - t[1] * t[2] != 0).map(lambda t: MobiusMap(*t))


@given(laurent(lo=-3, hi=3, max_terms=3), mobius, mobius)
def test_substitute_respects_composition(p, m1, m2):
    lhs = substitute(p, m1 @ m2)
    rhs = substitute(p, m1).compose(m2)
    assert lhs == rhs


@given(mobius, mobius, mobius)
def test_mobius_group_laws(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ MobiusMap.identity() == a
    assert a @ a.inverse() == MobiusMap.identity()


def test_mobius_fixed_points():
    assert MobiusMap(0, -2, 1, 0).fixed_points() == []
    assert MobiusMap(2, 0, 0, 1).fixed_points() == [None, Fraction(0)]
    assert MobiusMap(0, 4, 1, 0).fixed_points() == [Fraction(-2), Fraction(2)]
    with pytest.raises(ValueError):
        MobiusMap(1, 2, 2, 4)


def test_rational_map_canonical_form():
    r = RationalMap(U(2) - 1, (U(1) - 1).scale(2))
    assert r.num == (U(1) + 1).scale(Fraction(1, 2)) and r.den == 1
    r = RationalMap(U(1).scale(4), U(2).scale(2) + 2)
    assert r.den == U(2) + 1 and r.num == U(1).scale(2)
    assert RationalMap(U(-1), LaurentPoly.const(1)) == RationalMap(LaurentPoly.const(1), U(1))


def test_kernel_and_rank_examples():
    assert kernel(ExactMatrix.identity(3)) == []
    assert len(kernel(ExactMatrix.zeros(2, 5))) == 5
    m = ExactMatrix([[1, 2], [2, 4]])
    (v,) = kernel(m)
    assert v == (Fraction(-2), Fraction(1))
    assert m.apply(v) == (0, 0)
    assert rank(ExactMatrix.identity(4)) == 4
    assert rank(ExactMatrix.zeros(3, 3)) == 0
    assert rank(ExactMatrix([[1, 2], [2, 4], [3, 6]])) == 1


matrices = st.integers(1, 5).flatmap(lambda c: st.lists(
    st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=5))


@given(matrices)
def test_rank_nullity_and_sympy_oracle(rows):
    m = ExactMatrix(rows)
    ker = m.kernel()
    assert m.rank() + len(ker) == m.ncols
    assert m.rank() == sympy.Matrix(rows).rank()
    for v in ker:
        assert all(c == 0 for c in m.apply(v))


def test_rref_is_deterministic():
    m = ExactMatrix([[0, 2, 4], [1, 1, 1], [1, 3, 5]])
    assert m.rref() == m.rref()
    rows, piv = m.rref()
    assert piv == (0, 1)
    assert rows[0] == (1, 0, -1)


@given(polynomials(), polynomials())
def test_gcd_matches_sympy(p, q):
    g = poly_gcd(p, q)
    expect = sympy.Poly(sympy.gcd(to_sympy(p), to_sympy(q)), x)
    if p.is_zero() and q.is_zero():
        assert g.is_zero()
        return
    assert sympy.expand(to_sympy(g) - expect.monic().as_expr()) == 0


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 3)), min_size=1, max_size=4), nonzero_rationals)
def test_squarefree_decomposition(factors, lead):
    p = LaurentPoly.const(lead)
    for r, k in factors:
        p = p * (U(1) - r) ** k
    parts = squarefree_decomposition(p)
    prod = LaurentPoly.const(1)
    for f, i in parts:
        prod = prod * f ** i
        assert poly_gcd(f, f.derivative()).degree() == 0
    assert prod.scale(lead) == p
    mult = {}
    for r, k in factors:
        mult[r] = mult.get(r, 0) + k
    assert sorted(i for f, i in parts for _ in range(f.degree())) == sorted(mult.values())


def test_json_round_trip_and_errors():
    p = U(-3, Fraction(-1, 2)) + U(4, 7)
    data = laurent_to_json(p)
    assert data == [[-3, "-1/2"], [4, "7/1"]]
    assert laurent_from_json(data) == p
    for bad in ([[1, "1"], [0, "1"]], [[1.5, "1"]], [[True, "1"]], [[1, 2]], {"a": 1}, [[1]]):
        with pytest.raises(FormatError):
            laurent_from_json(bad, field="b")
