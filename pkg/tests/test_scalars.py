"""Exact scalar arithmetic: closure, field identities, backend isolation."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tritangle import GaussianRational
from tritangle.scalars import abs2, as_approx, as_exact, parse_rational

fracs = st.fractions(max_denominator=40)
scalars = st.builds(GaussianRational, fracs, fracs)
nonzero_scalars = scalars.filter(bool)


def test_construction_and_parts():
    z = GaussianRational(Fraction(1, 2), Fraction(-3))
    assert z.re == Fraction(1, 2)
    assert z.im == -3
    assert str(z) == "1/2-3i"


def test_float_input_rejected():
    with pytest.raises(TypeError):
        GaussianRational(0.5)
    with pytest.raises(TypeError):
        GaussianRational(1, 0.25)


@pytest.mark.parametrize("other", [0.5, 2.0j, complex(1, 1)])
def test_mixed_backend_arithmetic_rejected(other):
    z = GaussianRational(1, 1)
    for op in (lambda: z + other, lambda: z * other, lambda: z - other, lambda: z / other):
        with pytest.raises(TypeError):
            op()


@given(scalars, scalars, scalars)
def test_ring_identities(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert abs2(a * b) == abs2(a) * abs2(b)


@given(scalars, nonzero_scalars)
def test_division_roundtrip(a, b):
    assert (a / b) * b == a


@given(scalars)
def test_abs2_nonnegative_rational(a):
    m = a.abs2()
    assert isinstance(m, Fraction)
    assert m >= 0
    assert (m == 0) == (not a)


def test_integers_and_fractions_mix_in():
    z = GaussianRational(1, 2)
    assert z + 1 == GaussianRational(2, 2)
    assert 2 * z == GaussianRational(2, 4)
    assert z - Fraction(1, 2) == GaussianRational(Fraction(1, 2), 2)
    assert 1 / GaussianRational(0, 1) == GaussianRational(0, -1)


def test_explicit_conversion():
    z = GaussianRational(Fraction(1, 2), Fraction(-3))
    assert z.to_complex() == complex(0.5, -3.0)
    assert as_approx(z) == complex(0.5, -3.0)
    assert as_exact((1, Fraction(1, 3))) == GaussianRational(1, Fraction(1, 3))


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-2") == Fraction(-2)
    with pytest.raises(ValueError):
        parse_rational("x")


def test_hash_consistency():
    assert hash(GaussianRational(1, 2)) == hash(GaussianRational(Fraction(2, 2), 2))
    d = {GaussianRational(1): "one"}
    assert d[GaussianRational(Fraction(3, 3))] == "one"
