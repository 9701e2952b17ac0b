from fractions import Fraction

import pytest

from affp1.algebra import ExactMatrix, LaurentPoly, MobiusMap, substitute
from affp1.double import (
    GluedDouble,
    NotTangent,
    difference_map,
    glued_h0,
    glued_ledger,
    gluing_parameter_independence,
    moduli_dimension_report,
    pushforward_field,
    restriction_to_L,
)
from affp1.hirzebruch import GlobalVectorField, SectionCurve, tangent_fields_to_section, tangent_pair_ledger

U = LaurentPoly.monomial
SAMPLES = [Fraction(1), Fraction(2), Fraction(1, 2), Fraction(7, 3), Fraction(10)]


def test_gluing_map_facts():
    d = GluedDouble(3, 1, Fraction(5, 2))
    assert d.phi_fixed_points() == []
    assert d.tau_fixed_point_free()
    assert d.phi_involutive()
    with pytest.raises(ValueError):
        GluedDouble(3, 1, -1)
    with pytest.raises(ValueError):
        GluedDouble(0, 1)


def test_pushforward_formula():
    a = Fraction(3)
    phi = MobiusMap(0, -a, 1, 0)
    c0, c1, c2 = Fraction(2), Fraction(-1), Fraction(5)
    g = LaurentPoly.from_coeffs([c0, c1, c2])
    assert pushforward_field(g, phi) == LaurentPoly.from_coeffs([c2 * a, -c1, c0 / a])


@pytest.mark.parametrize("m", [MobiusMap(1, 2, 3, 5), MobiusMap(0, -2, 1, 0), MobiusMap(3, 0, 0, 1)])
def test_pushforward_chain_rule_oracle(m):
    """h(m(u)) = g(u) m'(u), checked at sample points."""
    g = LaurentPoly.from_coeffs([1, -2, 3])
    h = pushforward_field(g, m)
    a, b, c, d = m.matrix()
    for x in (Fraction(1), Fraction(2), Fraction(-7, 3)):
        deriv = m.det / (c * x + d) ** 2
        assert h(m(x)) == g(x) * deriv


def test_pushforward_is_functorial():
    g = LaurentPoly.from_coeffs([1, 4, -1])
    m1, m2 = MobiusMap(2, 1, 1, 1), MobiusMap(0, -3, 1, 0)
    assert pushforward_field(pushforward_field(g, m2), m1) == pushforward_field(g, m1 @ m2)
    assert substitute(U(1), m1 @ m2) == substitute(U(1), m1).compose(m2)


def test_restriction_examples():
    torus = GlobalVectorField(U(1), LaurentPoly(), LaurentPoly(), LaurentPoly())
    assert restriction_to_L(3, 0, torus) == U(1)
    # on the 2-dimensional tangent space of the l = 1 pair the restriction has
    # trivial kernel: no nonzero field fixes L pointwise
    fields = tangent_fields_to_section(3, SectionCurve.canonical(3, 1))
    images = [restriction_to_L(3, 1, f) for f in fields]
    assert ExactMatrix([[g.coeff(k) for k in range(3)] for g in images], 3).rank() == 2
    scalar = GlobalVectorField(LaurentPoly(), LaurentPoly(), LaurentPoly.const(1), LaurentPoly())
    with pytest.raises(NotTangent):
        restriction_to_L(3, 1, scalar)
    full = tangent_fields_to_section(3, SectionCurve.canonical(3, 0))
    imgs = {tuple(restriction_to_L(3, 0, f).coeff(k) for k in range(3)) for f in full}
    assert ExactMatrix(list(imgs), 3).rank() == 3


def test_scalar_field_restricts_to_zero_on_gamma_infinity():
    scalar = GlobalVectorField(LaurentPoly(), LaurentPoly(), LaurentPoly.const(1), LaurentPoly())
    assert restriction_to_L(3, 0, scalar).is_zero()


@pytest.mark.parametrize("n,l,h", [(3, 0, (5, 4, 0)), (3, 1, (1, 4, 0)), (4, 2, (1, 10, 0))])
def test_glued_examples(n, l, h):
    d = GluedDouble(n, l)
    assert glued_h0(d)[0] == h[0]
    assert glued_ledger(d)["Theta_glued"] == h


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("l", range(0, 4))
def test_glued_table(n, l):
    d = GluedDouble(n, l)
    led = glued_ledger(d)
    pair = tangent_pair_ledger(n, d.section)["Theta_FL"]
    image = led.notes["image_dim"]
    assert glued_h0(d)[0] + image == 2 * pair[0]
    assert image == (3 if l <= 1 else 1)
    assert led.euler_consistent()
    assert led.entries["Theta_glued"].chi == 2 * (6 - (n + 2 * l + 1)) - 3
    expected = (5, 2 * (n - 1), 0) if l == 0 else (1, 2 * (n + 2 * l - 3), 0)
    assert led["Theta_glued"] == expected
    assert gluing_parameter_independence(n, l, SAMPLES)


def test_matching_pairs_really_match():
    d = GluedDouble(3, 1, Fraction(7, 3))
    m = difference_map(d)
    _, basis = glued_h0(d)
    for vec in basis:
        assert all(x == 0 for x in m.apply(vec))


def test_independence_examples():
    assert gluing_parameter_independence(3, 1, [1, 2, Fraction(7, 3)])
    assert gluing_parameter_independence(5, 0, [1, 1000])
    assert gluing_parameter_independence(4, 2, [Fraction(1, 2), 3])
    with pytest.raises(ValueError):
        gluing_parameter_independence(3, 1, [])


def test_moduli_report():
    r = moduli_dimension_report(3)
    assert r["moduli_dim"] == 4 and r["h1_theta_Z"] == 4
    assert r["forget_injective"] and r["forget_surjective"]
    r = moduli_dimension_report(5)
    assert r["moduli_dim"] == 8 and r["kahler_codimension"] == 4
    assert not r["forget_surjective"]
    assert r["index"] == -8 and r["h1_theta_Z_minus_D"] == 1
    for q in r.quantities:
        assert q.citation
        if q.status == "cited":
            assert q.citation != "derived"
    r = moduli_dimension_report(2)
    assert r["forget_kernel_dim"] == 1 and r.remark
    with pytest.raises(KeyError):
        r["moduli_dim"]
    with pytest.raises(ValueError):
        moduli_dimension_report(1)
