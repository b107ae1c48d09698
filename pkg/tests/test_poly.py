"""Tests for exact polynomial arithmetic and the diagonal-family closed
forms."""

import random
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monsky.errors import (
    BadParameters,
    IndexOutOfRange,
    MissingVariable,
    NotDivisible,
    VariableUniverseMismatch,
    ZeroPolynomial,
)
from monsky.poly import (
    L,
    L_product,
    MultiPoly,
    diagonal_raw,
    diagonal_variables,
    diagonal_with_factor,
    divide_by_linear,
    monsky_diagonal,
    poly_from_jsonable,
    poly_from_text,
    poly_to_jsonable,
    poly_to_text,
    sigma,
    sigma_bar,
)

XYZ = ("x", "y", "z")


def var(universe, name):
    return MultiPoly.variable(universe, name)


# --- arithmetic basics -----------------------------------------------------


def test_add_zero_is_identity():
    p = var(XYZ, "x") + var(XYZ, "y").scale(3)
    assert p + MultiPoly.zero(XYZ) == p


def test_square_of_sum():
    x, y = var(XYZ, "x"), var(XYZ, "y")
    square = (x + y) * (x + y)
    assert square == x * x + (x * y).scale(2) + y * y


def test_cross_product_coefficients():
    # sigma_1 * sigma_bar_1 for n=1: all four cross coefficients are 1
    p = sigma(1, 1) * sigma_bar(1, 1)
    assert sorted(p.terms.values()) == [1, 1, 1, 1]
    assert p.total_degree() == 2


def test_universe_mismatch_raises():
    p = var(XYZ, "x")
    q = var(("a", "b"), "a")
    with pytest.raises(VariableUniverseMismatch):
        p + q
    with pytest.raises(VariableUniverseMismatch):
        p * q


def test_construction_guards():
    with pytest.raises(MissingVariable):
        var(XYZ, "w")
    with pytest.raises(BadParameters):
        MultiPoly(XYZ, {(1, 0): 1})  # wrong arity
    with pytest.raises(BadParameters):
        MultiPoly(XYZ, {(1, 0, 0): 0})  # stored zero


def test_zero_polynomial_guards():
    zero = MultiPoly.zero(XYZ)
    assert zero.is_zero() and zero.total_degree() == 0
    with pytest.raises(ZeroPolynomial):
        zero.content()
    with pytest.raises(ZeroPolynomial):
        zero.primitive_part()
    with pytest.raises(ZeroPolynomial):
        zero.leading()


def test_content_and_primitive_part():
    a, b = var(XYZ, "x"), var(XYZ, "y")
    p = (a + b).scale(2)
    assert p.content() == 2
    assert p.primitive_part() == a + b
    assert p.primitive_part().primitive_part() == p.primitive_part()
    # sign normalization: leading term of the primitive part is positive
    q = (a - b).scale(-3)
    assert q.primitive_part() == a - b


# --- evaluation ------------------------------------------------------------


def test_eval_no_constant_term_at_zero():
    p = var(XYZ, "x") * var(XYZ, "y") - var(XYZ, "z").scale(7)
    assert p.eval({v: 0 for v in XYZ}) == 0


def test_eval_requires_total_assignment():
    p = var(XYZ, "x")
    with pytest.raises(MissingVariable):
        p.eval({"x": 1, "y": 2})
    assert p.eval({"x": 2, "y": 0, "z": 0, "extra": 9}) == 2


def test_eval_matches_brute_force():
    rng = random.Random(17)
    u = diagonal_variables(2)
    p = diagonal_raw(2)
    for _ in range(10):
        a = {v: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for v in u}
        brute = sum(
            Fraction(c) * prod(a[v] ** e for v, e in zip(u, exps))
            for exps, c in p.terms.items()
        )
        assert p.eval(a) == brute


# --- linear forms ----------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 4])
def test_sigma_boundary_identities(n):
    assert sigma(0, n).is_zero()
    assert sigma_bar(n + 1, n).is_zero()
    assert sigma_bar(0, n) == sigma(n + 1, n)
    for k in range(n + 2):
        assert L(k, n) == sigma(k, n) - sigma_bar(k, n)


def test_L_explicit_small_forms():
    u = diagonal_variables(1)
    total = sum((var(u, v) for v in u), MultiPoly.zero(u))
    assert L(0, 1) == -total
    assert L(1, 1) == (
        var(u, "A1") + var(u, "B1") - var(u, "A2") - var(u, "B2")
    )


def test_index_range_errors():
    with pytest.raises(IndexOutOfRange):
        sigma(-1, 3)
    with pytest.raises(IndexOutOfRange):
        sigma_bar(5, 3)
    with pytest.raises(IndexOutOfRange):
        L(6, 4)
    with pytest.raises(IndexOutOfRange):
        L_product([0, 9], 3)


def test_L_product_basics():
    one = MultiPoly.constant(diagonal_variables(2), 1)
    assert L_product([], 2) == one
    assert L_product([1], 2) == L(1, 2)
    assert L_product([1, 2], 2).total_degree() == 2


# --- the diagonal closed forms ---------------------------------------------


def test_raw_form_n1_frozen():
    assert poly_to_text(diagonal_raw(1)) == "-1*A1 +1*B1 +1*A2 -1*B2"
    assert poly_to_text(monsky_diagonal(1)) == "+1*A1 -1*B1 -1*A2 +1*B2"


def test_raw_form_n2_frozen():
    assert poly_to_text(diagonal_raw(2)) == (
        "-1*A1^2 -2*A1*B2 +2*A1*A3 +1*B1^2 +2*B1*A2 -2*B1*B3 "
        "+1*A2^2 +2*A2*B3 -1*B2^2 -2*B2*A3 -1*A3^2 +1*B3^2"
    )


def test_lettered_quadrilateral_relation_matches_n1():
    # The four areas of the one-interior-point drawing satisfy
    # A - B + C - D = 0 with A=B1, B=A1, C=A2, D=B2.
    u = diagonal_variables(1)
    lettered = var(u, "B1") - var(u, "A1") + var(u, "A2") - var(u, "B2")
    assert lettered == diagonal_raw(1)


def test_lettered_hexagon_relation_matches_n2():
    # (A+C+E)^2 - 4AC - (B+D+F)^2 + 4DF with A=B1, B=B2, C=B3, D=A1,
    # E=A2, F=A3 expands to exactly the raw n=2 form.
    u = diagonal_variables(2)
    A, B, C = var(u, "B1"), var(u, "B2"), var(u, "B3")
    D, E, F = var(u, "A1"), var(u, "A2"), var(u, "A3")
    head = (A + C + E) * (A + C + E) - (A * C).scale(4)
    tail = (B + D + F) * (B + D + F) - (D * F).scale(4)
    assert head - tail == diagonal_raw(2)


@pytest.mark.parametrize("n", range(1, 7))
def test_diagonal_degree_and_homogeneity(n):
    m = monsky_diagonal(n)
    assert m.total_degree() == n
    assert m.is_homogeneous()


@pytest.mark.parametrize("n", range(1, 5))
def test_diagonal_content_is_one(n):
    # The raw closed form is already primitive for every n tested.
    assert diagonal_raw(n).content() == 1


@pytest.mark.parametrize("n", range(1, 4))
def test_homogeneous_scaling(n):
    rng = random.Random(23 + n)
    m = monsky_diagonal(n)
    u = diagonal_variables(n)
    a = {v: Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for v in u}
    lam = Fraction(rng.randint(1, 30), rng.randint(1, 30))
    scaled = {v: lam * x for v, x in a.items()}
    assert m.eval(scaled) == lam**n * m.eval(a)


def test_closed_form_guards():
    with pytest.raises(BadParameters):
        diagonal_raw(0)
    with pytest.raises(BadParameters):
        monsky_diagonal(0)
    with pytest.raises(BadParameters):
        diagonal_variables(-1)


# --- factorization ---------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 4))
def test_factored_form_identity(n):
    assert diagonal_with_factor(n) == L(n + 1, n) * diagonal_raw(n)


@pytest.mark.parametrize("n", range(1, 4))
def test_division_recovers_cofactor(n):
    quotient = divide_by_linear(diagonal_with_factor(n), L(n + 1, n))
    assert quotient == diagonal_raw(n)
    assert quotient.primitive_part() == monsky_diagonal(n)


def test_division_errors():
    u = diagonal_variables(1)
    with pytest.raises(NotDivisible):
        divide_by_linear(sigma(1, 1), L(1, 1))
    with pytest.raises(BadParameters):
        divide_by_linear(sigma(1, 1), sigma(1, 1) * sigma(1, 1))
    with pytest.raises(ZeroPolynomial):
        divide_by_linear(sigma(1, 1), MultiPoly.zero(u))
    with pytest.raises(VariableUniverseMismatch):
        divide_by_linear(sigma(1, 1), MultiPoly.constant(XYZ, 1))


def test_division_by_constant():
    p = sigma(1, 1).scale(6)
    assert divide_by_linear(p, MultiPoly.constant(diagonal_variables(1), 3)) == sigma(1, 1).scale(2)
    with pytest.raises(NotDivisible):
        divide_by_linear(sigma(1, 1), MultiPoly.constant(diagonal_variables(1), 2))


# --- serialization ---------------------------------------------------------


def test_text_form_example():
    u = diagonal_variables(1)
    p = MultiPoly(u, {(1, 0, 0, 1): 2, (0, 0, 2, 0): -1})
    assert poly_to_text(p) == "+2*A1*B2 -1*A2^2"
    assert poly_from_text("+2*A1*B2 -1*A2^2", u) == p


def test_text_zero_and_constant():
    assert poly_to_text(MultiPoly.zero(XYZ)) == "0"
    assert poly_from_text("0", XYZ) == MultiPoly.zero(XYZ)
    assert poly_to_text(MultiPoly.constant(XYZ, -4)) == "-4"
    assert poly_from_text("-4", XYZ) == MultiPoly.constant(XYZ, -4)


def test_text_parse_errors():
    with pytest.raises(BadParameters):
        poly_from_text("2*A1", diagonal_variables(1))  # missing sign
    with pytest.raises(BadParameters):
        poly_from_text("+x*A1", diagonal_variables(1))
    with pytest.raises(BadParameters):
        poly_from_text("+2*A1^0", diagonal_variables(1))
    with pytest.raises(MissingVariable):
        poly_from_text("+2*Q7", diagonal_variables(1))


def test_json_roundtrip():
    p = diagonal_raw(2)
    obj = poly_to_jsonable(p)
    assert obj["variables"] == list(diagonal_variables(2))
    assert poly_from_jsonable(obj) == p
    with pytest.raises(BadParameters):
        poly_from_jsonable({"variables": ["x"]})


def test_text_roundtrip_randomized():
    rng = random.Random(3)
    for _ in range(25):
        terms = {}
        for _ in range(rng.randint(0, 6)):
            exps = tuple(rng.randint(0, 3) for _ in XYZ)
            coeff = rng.choice([-7, -3, -1, 1, 2, 9])
            terms[exps] = coeff
        p = MultiPoly(XYZ, terms)
        assert poly_from_text(poly_to_text(p), XYZ) == p
        assert poly_from_jsonable(poly_to_jsonable(p)) == p


# --- randomized ring axioms ------------------------------------------------


coeffs = st.integers(min_value=-6, max_value=6).filter(lambda c: c != 0)
exponents = st.tuples(*[st.integers(min_value=0, max_value=3)] * 3)
polys = st.dictionaries(exponents, coeffs, max_size=5).map(
    lambda terms: MultiPoly(XYZ, terms)
)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == MultiPoly.zero(XYZ)


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_eval_is_a_homomorphism(p, q):
    a = {"x": Fraction(2, 3), "y": Fraction(-1, 2), "z": Fraction(5)}
    assert (p + q).eval(a) == p.eval(a) + q.eval(a)
    assert (p * q).eval(a) == p.eval(a) * q.eval(a)
