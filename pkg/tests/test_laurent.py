import pytest
from hypothesis import given, strategies as st

from newtonfill.errors import PolySyntaxError, UnknownVariableError, VariableMismatchError
from newtonfill.laurent import (
    LaurentPoly,
    MonomialSubstitution,
    VariableList,
    extend_with_pinch_variable,
    monomial_count,
    parse_poly,
    poly_add,
    poly_mul,
    poly_pow,
    render,
    substitute,
)
from newtonfill.scenarios import alpha_poly

from conftest import XY, XYZ, polys


def P(text, variables=XY):
    return parse_poly(text, variables)


def test_add_cancels_in_characteristic_two():
    p = P("x^2 + y^-3*x")
    assert poly_add(p, p).is_zero()
    assert P("x + y") + P("x") == P("y")
    assert P("x^2 + y^2") + P("x^2 + x") == P("y^2 + x")


def test_mul_examples():
    assert P("x + y") * P("x + y") == P("x^2 + y^2")
    assert P("x^-1") * P("x") == LaurentPoly.one(XY)
    assert poly_mul(P("x + y"), P("x + 1")) == P("x^2 + x*y + x + y")


def test_pow_examples():
    assert poly_pow(P("x + y"), 2) == P("x^2 + y^2")
    assert poly_pow(P("x + y + 1"), 2) == P("x^2 + y^2 + 1")
    p = P("x*y^-1 + y^3")
    assert poly_pow(p, 1) == p
    assert poly_pow(p, 0) == LaurentPoly.one(XY)


def test_pow_rejects_negative():
    with pytest.raises(ValueError):
        poly_pow(P("x + y"), -1)


def test_mixed_variable_lists_rejected():
    with pytest.raises(VariableMismatchError):
        P("x") + parse_poly("x", XYZ)
    with pytest.raises(VariableMismatchError):
        P("x") * parse_poly("x", ["x", "w"])


def test_substitute_examples():
    tilde = VariableList(["xt", "yt"])
    sigma = MonomialSubstitution.from_mapping(tilde, XYZ, {"xt": "x*y^-1", "yt": "z^-2"})
    assert substitute(parse_poly("xt + yt", tilde), sigma) == parse_poly("x*y^-1 + z^-2", XYZ)
    alpha2 = parse_poly("xt^2 + yt^2 + xt", tilde)
    assert substitute(alpha2, sigma) == parse_poly("x^2*y^-2 + z^-4 + x*y^-1", XYZ)


def test_substitute_eliminates_relation_variables():
    raw = VariableList(["s9", "s10", "s11", "s12", "s13", "s16"])
    target = VariableList(["s9", "s11", "s12", "s13"])
    value = parse_poly(
        "s9*s13*s12^2*s10^-1*s11^-2*s16^-1 + s13*s12*s11^-1*s16^-1 + s9*s11^-1", raw
    )
    sigma = MonomialSubstitution.from_mapping(
        raw, target, {"s10": "s11", "s16": "s11^-1", "s13": "s11*s12^-1*s9^-1"}
    )
    assert substitute(value, sigma) == parse_poly("s12*s11^-1 + s11*s9^-1 + s11^-1*s9", target)


def test_substitution_rejects_polynomial_image():
    with pytest.raises(ValueError):
        MonomialSubstitution.from_mapping(["a"], XY, {"a": "x + y"})
    with pytest.raises(UnknownVariableError):
        MonomialSubstitution.from_mapping(["a"], XY, {"b": "x"})


def test_substitution_can_collide_terms():
    sigma = MonomialSubstitution.from_mapping(XY, ["t"], {"x": "t", "y": "t"})
    assert substitute(P("x + y"), sigma).is_zero()


def test_monomial_counts():
    assert monomial_count(alpha_poly(1)) == 2
    assert monomial_count(alpha_poly(7)) == 14
    assert monomial_count(alpha_poly(10)) == 14
    assert monomial_count(LaurentPoly.zero(XY)) == 0


def test_parse_examples():
    assert P("x^2 + y^2 + x").support == {(2, 0), (0, 2), (1, 0)}
    V = VariableList(["s9", "s11", "s12", "s13"])
    assert len(parse_poly("s12*s11^-1 + s11*s9^-1 + s11^-1*s9", V)) == 3
    assert P("x + x").is_zero()
    assert P("1") == LaurentPoly.one(XY)
    assert P("x*x*y^-1") == LaurentPoly.monomial(XY, (2, -1))
    assert P("  x ^ -2 *y") == LaurentPoly.monomial(XY, (-2, 1))


@pytest.mark.parametrize(
    "text, pos",
    [("x^2+*y", 4), ("x +", 3), ("x^", 2), ("x^y", 2), ("2*x", 0), ("x $ y", 2), ("", 0), ("x y", 2)],
)
def test_parse_syntax_errors_report_position(text, pos):
    with pytest.raises(PolySyntaxError) as info:
        P(text)
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariableError) as info:
        P("x + q")
    assert info.value.name == "q"


def test_variable_list_validation():
    with pytest.raises(ValueError):
        VariableList(["x", "x"])
    with pytest.raises(ValueError):
        VariableList([])
    with pytest.raises(ValueError):
        VariableList.parse("x,,y")
    assert VariableList.parse(" a, b ,c") == ("a", "b", "c")


def test_exponent_overflow_is_rejected():
    with pytest.raises(OverflowError):
        LaurentPoly.monomial(XY, (2**63, 0))


def test_pinch_extension():
    f, g = P("x + y"), P("x^2")
    assert extend_with_pinch_variable(f, LaurentPoly.zero(XY)).support == {(1, 0, 0), (0, 1, 0)}
    assert extend_with_pinch_variable(P("x"), LaurentPoly.one(XY)) == parse_poly("x + s^-1", ["x", "y", "s"])
    h = extend_with_pinch_variable(f, g)
    assert h == parse_poly("x + y + x^2*s^-1", ["x", "y", "s"])
    with pytest.raises(ValueError):
        extend_with_pinch_variable(f, g, name="x")


def test_render_examples():
    assert render(LaurentPoly.zero(XY)) == "0"
    assert render(LaurentPoly.one(XY)) == "1"
    assert render(P("y^-1*x^2 + y")) == "x^2*y^-1 + y"


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + p == LaurentPoly.zero(XY)


@given(polys(max_terms=4, spread=3), st.integers(0, 9))
def test_pow_matches_repeated_product(p, n):
    acc = LaurentPoly.one(XY)
    for _ in range(n):
        acc = acc * p
    assert poly_pow(p, n) == acc


@given(polys(max_terms=5))
def test_frobenius(p):
    assert p * p == LaurentPoly(XY, frozenset(tuple(2 * e for e in a) for a in p.support))


@given(polys(XYZ))
def test_render_round_trip(p):
    assert parse_poly(render(p), XYZ) == p
