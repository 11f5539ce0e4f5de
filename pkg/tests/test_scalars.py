from fractions import Fraction

import numpy as np
import pytest

from natint import (
    F01,
    FuzzyRangeOverflow,
    Mod,
    NONNEG,
    NotARing,
    ParseError,
    Q,
    Z,
    mixed_neutro,
    parse_domain,
    pure_neutro,
)


def test_fixed_domain_parsing():
    assert parse_domain("Z") is Z
    assert parse_domain("Q") is Q
    assert parse_domain("F01") is F01
    assert parse_domain("Zn:12") is Mod(12)
    assert parse_domain(" Zn:12 ") is Mod(12)


def test_mod_is_cached():
    assert Mod(7) is Mod(7)
    assert Mod(7) is not Mod(11)


@pytest.mark.parametrize("bad", ["Zn:1", "Zn:0", "Zn:-3", "Zn:x", "W", ""])
def test_bad_domain_specs(bad):
    with pytest.raises(ParseError):
        parse_domain(bad)


def test_integer_domain():
    assert Z.parse_scalar("-17") == -17
    assert Z.add(2, 3) == 5
    assert Z.size is None
    assert Z.inv(1) == 1 and Z.inv(-1) == -1 and Z.inv(2) is None


def test_nonneg_has_no_negation():
    assert NONNEG.parse_scalar("4") == 4
    with pytest.raises(ParseError):
        NONNEG.parse_scalar("-4")
    with pytest.raises(NotARing):
        NONNEG.sub(1, 2)


def test_rationals_stay_exact():
    third = Q.parse_scalar("1/3")
    assert third * 3 == 1
    assert Q.format_scalar(Fraction(6, 4)) == "3/2"
    assert Q.div(Fraction(1), Fraction(7)) == Fraction(1, 7)


def test_mod_arithmetic_and_units():
    d = Mod(12)
    assert d.size == 12
    assert d.add(7, 8) == 3
    assert d.mul(4, 6) == 0
    assert d.inv(5) == 5            # 5*5 = 25 = 1
    assert d.inv(4) is None         # gcd(4,12) > 1
    assert d.parse_scalar("25") == 1


def test_fuzzy_unit_domain_bounds():
    a = F01.parse_scalar("3/10")
    b = F01.parse_scalar("9/10")
    assert F01.mul(a, b) == Fraction(27, 100)
    with pytest.raises(FuzzyRangeOverflow):
        F01.add(a, b)
    with pytest.raises(ParseError):
        F01.parse_scalar("3/2")


def test_pure_neutro_multiples_of_I():
    d = parse_domain("ZnI:12")
    assert d is pure_neutro(Mod(12))
    x = d.parse_scalar("4I")
    # I^2 = I, so (4I)(4I) = 16I = 4I over Z12
    assert d.mul(x, x) == x
    assert d.format_scalar(x) == "4I"
    assert d.size == 12


def test_mixed_neutro_pairs():
    d = parse_domain("Q+I")
    assert d is mixed_neutro(Q)
    x = d.parse_scalar("5+2I")
    y = d.parse_scalar("-3+8I")
    # (a+bI)(c+dI) = ac + (ad+bc+bd)I
    assert d.mul(x, y) == (-15, 50)
    assert d.add(x, y) == (2, 10)
    assert d.format_scalar(d.mul(x, y)) == "-15+50I"


def test_mixed_neutro_inverse():
    d = parse_domain("Q+I")
    x = d.parse_scalar("2+3I")
    assert d.mul(x, d.inv(x)) == d.one


def test_mixed_neutro_mod_base():
    d = parse_domain("Zn+I:5")
    x = d.parse_scalar("3+4I")
    assert d.add(x, x) == (1, 3)
    assert d.size == 25


def test_domain_spec_roundtrip():
    for spec in ("Z", "Q", "F01", "Zn:9", "ZnI:7", "Z+I", "Zn+I:5", "QI"):
        d = parse_domain(spec)
        assert parse_domain(d.spec) is d


def test_scalar_format_parse_roundtrip():
    for spec, samples in (
        ("Zn:9", ["0", "5", "8"]),
        ("Q", ["-7/3", "0", "11"]),
        ("ZnI:7", ["0", "3I", "6I"]),
        ("Zn+I:5", ["0", "2+3I", "4I", "3"]),
        ("F01", ["0", "1/2", "1"]),
    ):
        d = parse_domain(spec)
        for text in samples:
            v = d.parse_scalar(text)
            assert d.parse_scalar(d.format_scalar(v)) == v


def test_coerce_parses_strings_and_reduces():
    assert Q.coerce("1/2") == Fraction(1, 2)
    assert Mod(3).coerce(25) == 1
    assert Mod(3).coerce("25") == 1
    assert parse_domain("Z+I").coerce(5) == (5, 0)
    assert parse_domain("Z+I").coerce((2, -1)) == (2, -1)
    assert parse_domain("ZnI:12").coerce(16) == 4


def test_coerce_accepts_numpy_integers():
    assert Z.coerce(np.int64(7)) == 7
    assert Mod(5).coerce(np.int64(7)) == 2
    assert Q.coerce(np.int64(7)) == Fraction(7)


def test_coerce_rejects_floats_and_junk():
    with pytest.raises(TypeError):
        Q.coerce(0.5)
    with pytest.raises(TypeError):
        Z.coerce(Fraction(1, 2))
    with pytest.raises(TypeError):
        Mod(7).coerce([3])
    with pytest.raises(ParseError):
        F01.coerce(Fraction(3, 2))
    with pytest.raises(ParseError):
        NONNEG.coerce(-4)
