import pytest
from hypothesis import given, settings, strategies as st

from natint import (
    Flavor,
    IntervalPoly,
    Mod,
    ModulusMismatch,
    Q,
    Z,
    interval,
    parse_poly,
    poly_decompose,
    poly_recompose,
)


def zpoly(pairs, flavor=Flavor.CLOSED, cyclic=None):
    coeffs = [interval(Z, lo, hi, flavor) for lo, hi in pairs]
    return IntervalPoly(Z, flavor, coeffs, cyclic=cyclic)


def test_zero_one_constructors():
    z = IntervalPoly.zero(Z)
    one = IntervalPoly.one(Z)
    assert z.coeffs == ()
    assert one.coeffs == (interval(Z, 1, 1),)


def test_add_aligns_lengths():
    p = zpoly([(1, 2), (3, 4)])
    q = zpoly([(0, 1)])
    assert (p + q).coeffs == (interval(Z, 1, 3), interval(Z, 3, 4))


def test_known_product():
    # ([1,2] + [0,1]x) * ([2,0] + [1,1]x)
    p = zpoly([(1, 2), (0, 1)])
    q = zpoly([(2, 0), (1, 1)])
    r = p * q
    assert r.coeffs == (interval(Z, 2, 0),
                        interval(Z, 1, 2),
                        interval(Z, 0, 1))


def test_trailing_zero_coefficients_are_dropped():
    p = zpoly([(1, 1)])
    q = zpoly([(0, 0), (1, 1)])       # x
    r = zpoly([(0, 0), (-1, -1)])     # -x
    assert (p * (q + r)).coeffs == ()


coeff_lists = st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
                       min_size=0, max_size=5)


@given(coeff_lists, coeff_lists)
@settings(max_examples=80)
def test_product_decomposes(xs, ys):
    p, q = zpoly(xs), zpoly(ys)
    lo_p, hi_p = poly_decompose(p)
    lo_q, hi_q = poly_decompose(q)

    def scalar_mul(a, b):
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        while out and out[-1] == 0:
            out.pop()
        return out

    lo_r, hi_r = poly_decompose(p * q)
    assert list(lo_r) == scalar_mul(list(lo_p), list(lo_q))
    assert list(hi_r) == scalar_mul(list(hi_p), list(hi_q))


@given(coeff_lists)
def test_decompose_recompose(xs):
    p = zpoly(xs)
    lo, hi = poly_decompose(p)
    assert poly_recompose(lo, hi, Z, p.flavor) == p


def test_cyclic_reduction():
    # with x^2 = 1, x * x collapses to the constant term
    x = zpoly([(0, 0), (1, 1)], cyclic=2)
    assert (x * x).coeffs == (interval(Z, 1, 1),)


def test_cyclic_zero_divisor_over_z2():
    d = Mod(2)
    one = interval(d, 1, 1)
    p = IntervalPoly(d, Flavor.CLOSED, [one, one, one], cyclic=3)
    q = IntervalPoly(d, Flavor.CLOSED, [one, one], cyclic=3)
    # (1 + x + x^2)(1 + x) = 1 + x^3 = 1 + 1 = 0 over Z2 with x^3 = 1
    assert (p * q).coeffs == ()


def test_cyclic_mismatch_rejected():
    p = zpoly([(1, 1)], cyclic=2)
    q = zpoly([(1, 1)], cyclic=3)
    with pytest.raises(ModulusMismatch):
        p * q


def test_parse_poly_roundtrip():
    p = parse_poly("[1,2]x^2 + [0,1]x + [3,4]", Z)
    assert p.coeffs == (interval(Z, 3, 4),
                        interval(Z, 0, 1),
                        interval(Z, 1, 2))
    assert parse_poly(str(p), Z) == p


def test_parse_poly_over_q():
    from fractions import Fraction
    p = parse_poly("[1/2,1]x + [0,1/3]", Q)
    sq = p * p
    lo, hi = poly_decompose(sq)
    assert list(lo) == [0, 0, Fraction(1, 4)]
    assert list(hi) == [Fraction(1, 9), Fraction(2, 3), 1]


def test_str_of_zero_poly():
    assert str(IntervalPoly.zero(Z)) == "0"
