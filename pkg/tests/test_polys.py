import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from scottlab import polys as pl
from scottlab.gf import FieldCtx

F2 = FieldCtx(2, 1)
F3 = FieldCtx(3, 1)
F4 = FieldCtx(2, 2)
F9 = FieldCtx(3, 2)


def test_factor_x2_plus_x_over_gf2():
    unit, factors = pl.factor_poly(F2, pl.poly([0, 1, 1]))  # x^2 + x
    assert unit == 1
    assert [(f.tolist(), m) for f, m in factors] == [([0, 1], 1), ([1, 1], 1)]


def test_factor_field_equation_splits_completely():
    # x^9 - x over GF(9): nine distinct linear factors, one per element
    f = np.zeros(10, dtype=np.int64)
    f[9] = 1
    f[1] = F9.neg(1)
    _, factors = pl.factor_poly(F9, pl.poly(f))
    assert len(factors) == 9
    assert all(pl.poly_deg(w) == 1 and m == 1 for w, m in factors)
    roots = sorted(int(F9.neg(int(w[0]))) for w, _ in factors)
    assert roots == list(range(9))


def test_factor_with_multiplicity():
    # (x+1)^2 * x over GF(3)
    f = pl.poly_mul(F3, pl.poly_mul(F3, pl.poly([1, 1]), pl.poly([1, 1])), pl.poly([0, 1]))
    _, factors = pl.factor_poly(F3, f)
    assert [(w.tolist(), m) for w, m in factors] == [([0, 1], 1), ([1, 1], 2)]


def test_inseparable_power():
    # x^2 + 1 = (x+1)^2 over GF(2): derivative vanishes, p-th root path
    _, factors = pl.factor_poly(F2, pl.poly([1, 0, 1]))
    assert [(w.tolist(), m) for w, m in factors] == [([1, 1], 2)]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_factorization_matches_sympy_over_prime_fields(p):
    F = FieldCtx(p, 1)
    x = sympy.symbols("x")
    rng = np.random.default_rng(p)
    for _ in range(15):
        deg = int(rng.integers(1, 8))
        coeffs = rng.integers(0, p, size=deg + 1)
        coeffs[-1] = 1
        f = pl.poly(coeffs)
        if pl.poly_deg(f) < 1:
            continue
        _, ours = pl.factor_poly(F, f)
        expr = sum(int(c) * x**i for i, c in enumerate(f))
        _, theirs = sympy.factor_list(sympy.Poly(expr, x, modulus=p))
        norm_theirs = sorted(
            (tuple(int(c) % p for c in reversed(g.all_coeffs())), m) for g, m in theirs
        )
        norm_ours = sorted((tuple(int(c) for c in w), m) for w, m in ours)
        assert norm_ours == norm_theirs


def test_irreducibility_agrees_with_factor_count():
    for F in (F2, F3, F4):
        for tail in range(F.q**3):
            coeffs = [(tail // F.q**i) % F.q for i in range(3)] + [1]
            f = pl.poly(coeffs)
            _, factors = pl.factor_poly(F, f)
            single = len(factors) == 1 and factors[0][1] == 1
            assert pl.is_irreducible(F, f) == single


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=6), st.lists(st.integers(0, 2), min_size=1, max_size=6))
def test_divmod_roundtrip(a, b):
    f, g = pl.poly(a), pl.poly(b)
    if pl.poly_deg(g) < 0:
        return
    q, r = pl.poly_divmod(F3, f, g)
    assert pl.poly_deg(r) < pl.poly_deg(g)
    assert pl.poly_eq(pl.poly_add(F3, pl.poly_mul(F3, q, g), r), f)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=5), st.lists(st.integers(0, 3), min_size=1, max_size=5))
def test_xgcd_bezout(a, b):
    f, g = pl.poly(a), pl.poly(b)
    if pl.poly_deg(f) < 0 and pl.poly_deg(g) < 0:
        return
    d, u, v = pl.poly_xgcd(F4, f, g)
    combo = pl.poly_add(F4, pl.poly_mul(F4, u, f), pl.poly_mul(F4, v, g))
    assert pl.poly_eq(combo, d)
    assert pl.poly_eq(d, pl.poly_gcd(F4, f, g))


def test_factor_refuses_zero():
    with pytest.raises(pl.PolynomialError):
        pl.factor_poly(F2, pl.poly([]))


def test_eval_and_derivative():
    f = pl.poly([1, 2, 1])  # (x+1)^2 over GF(3)
    assert int(pl.poly_eval(F3, f, 2)) == 0
    assert pl.poly_derivative(F3, f).tolist() == [2, 2]
