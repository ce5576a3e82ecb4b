"""Ket-expression parsing: grammar coverage, errors, round trips, fuzz."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tritangle import (
    BipartiteState,
    EmptyState,
    GaussianRational,
    KetSyntaxError,
    MixedArity,
    TripartiteState,
    TritangleError,
    UnsupportedIrrational,
    parse,
    parse_state,
    render,
    state_to_ket,
    to_state,
)


def gr(re, im=0):
    return GaussianRational(Fraction(re), Fraction(im))


def test_ghz_expression():
    s = parse_state("(|000> + |111>)/sqrt(2)")
    assert isinstance(s, TripartiteState)
    assert s.amps == (gr(1), gr(0), gr(0), gr(0), gr(0), gr(0), gr(0), gr(1))
    assert s.scale2 == Fraction(1, 2)
    assert s.norm2() == 1


def test_psi_expression_group_coefficient():
    s = parse_state("1/2(|100>+|010>+|001>+|111>)")
    expected = (0, Fraction(1, 2), Fraction(1, 2), 0, Fraction(1, 2), 0, 0, Fraction(1, 2))
    assert s.amps == tuple(gr(v) for v in expected)
    assert s.norm2() == 1


def test_w_expression_sqrt_prefactor():
    s = parse_state("1/sqrt(3)(|001>+|100>+|010>)")
    assert s.amps == tuple(gr(v) for v in (0, 1, 1, 0, 1, 0, 0, 0))
    assert s.scale2 == Fraction(1, 3)


def test_cluster_expression_eight_signed_terms():
    e = parse("(|000>+|001>+|100>+|101>+|010>-|011>-|110>+|111>)/sqrt(8)")
    assert len(e.terms) == 8
    assert e.global_divisor == 8
    s = to_state(e)
    assert s.amp(0, 1, 1) == gr(-1)
    assert s.amp(1, 1, 1) == gr(1)
    assert s.norm2() == 1


def test_complex_coefficients():
    s = parse_state("i/2|01> - 1/2|10>")
    assert isinstance(s, BipartiteState)
    assert s.amps == (gr(0), gr(0, Fraction(1, 2)), gr(Fraction(-1, 2)), gr(0))


def test_coefficient_forms():
    assert parse_state("2*|00>").amps[0] == gr(2)
    assert parse_state("3i|01>").amps[1] == gr(0, 3)
    assert parse_state("1/2i|01>").amps[1] == gr(0, Fraction(1, 2))
    assert parse_state("i|01>").amps[1] == gr(0, 1)
    assert parse_state("-|00>+|11>").amps[0] == gr(-1)
    assert parse_state("3/4|10>").amps[2] == gr(Fraction(3, 4))


def test_duplicate_kets_merge():
    s = parse_state("|00>+|00>")
    assert s.amps[0] == gr(2)


def test_all_terms_cancel():
    with pytest.raises(EmptyState):
        parse("(|00> - |00>)")


def test_mixed_arity_rejected():
    with pytest.raises(MixedArity):
        parse("|00> + |000>")


def test_per_term_sqrt_shared():
    s = parse_state("1/sqrt(2)|00> + 1/sqrt(2)|11>")
    assert s.amps == (gr(1), gr(0), gr(0), gr(1))
    assert s.scale2 == Fraction(1, 2)


def test_per_term_sqrt_compatible_radicals():
    # sqrt(8)/sqrt(2) is the perfect square 4, so both fold over sqrt(8)
    s = parse_state("1/sqrt(2)|00> + 1/sqrt(8)|11>")
    assert s.amps == (gr(2), gr(0), gr(0), gr(1))
    assert s.scale2 == Fraction(1, 8)


def test_incompatible_radicals_rejected():
    with pytest.raises(UnsupportedIrrational):
        parse("1/sqrt(2)|00> + 1/2|11>")
    with pytest.raises(UnsupportedIrrational):
        parse("1/sqrt(2)|00> + 1/sqrt(3)|11>")


def test_syntax_errors_carry_offsets():
    with pytest.raises(KetSyntaxError) as err:
        parse("|00")
    assert err.value.offset == 3
    with pytest.raises(KetSyntaxError) as err:
        parse("|00> + @")
    assert err.value.offset == 7
    with pytest.raises(KetSyntaxError) as err:
        parse("(|00>+|11>)/2")
    assert err.value.offset == 12
    assert "sqrt" in err.value.expected


def test_more_syntax_errors():
    for bad in ("", ")", "|0000>", "|02>", "1/0|00>", "sqrt(2)", "foo", "(|00>", "|00>)"):
        with pytest.raises(KetSyntaxError):
            parse(bad)


def test_group_divisor_must_be_positive():
    with pytest.raises(KetSyntaxError):
        parse("(|00>+|11>)/sqrt(0)")


def test_render_round_trip_catalog():
    from tritangle.catalog import TABLE_ROWS

    for row in TABLE_ROWS:
        expr = parse(row.expression)
        again = parse(render(expr))
        assert to_state(again) == to_state(expr)


@st.composite
def ket_exprs(draw):
    arity = draw(st.sampled_from((2, 3)))
    basis = [format(v, f"0{arity}b") for v in range(1 << arity)]
    n_terms = draw(st.integers(1, 1 << arity))
    labels = draw(st.permutations(basis))[:n_terms]
    fracs = st.fractions(max_denominator=9)
    terms = []
    for bits in labels:
        c = GaussianRational(draw(fracs), draw(fracs))
        if not c:
            c = GaussianRational(1)
        terms.append((c, bits))
    divisor = draw(st.sampled_from((1, 2, 3, 5, 8)))
    from tritangle import KetExpr

    return KetExpr(tuple(terms), divisor)


@given(ket_exprs())
def test_render_round_trip_generated(expr):
    reparsed = parse(render(expr))
    assert to_state(reparsed) == to_state(expr)


def test_state_to_ket_round_trip():
    from tritangle.catalog import ghz_state, w_state

    for s in (ghz_state(), w_state()):
        assert parse_state(state_to_ket(s)) == s


def test_state_to_ket_non_square_scale2():
    from _util import same_physical_state

    # prefactor sqrt(2/3): numerator is not a perfect square
    s = TripartiteState.exact((1, 0, 0, -2, 0, 0, 0, 5), scale2=Fraction(2, 3))
    text = state_to_ket(s)
    assert same_physical_state(parse_state(text), s)


def test_fuzz_random_bytes_never_crash():
    rng = random.Random(1234)
    alphabet = "0123456789+-*/()|<>iqrtsx \t\x00é"
    for _ in range(20_000):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 24)))
        try:
            parse(text)
        except TritangleError:
            pass


@settings(max_examples=300)
@given(st.text(max_size=40))
def test_fuzz_hypothesis_text(text):
    try:
        parse(text)
    except TritangleError:
        pass
