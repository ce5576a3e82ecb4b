"""Hyperdeterminant, sub-concurrences, classification, display scaling."""

import itertools
import random
from fractions import Fraction

from tritangle import (
    Axis,
    GaussianRational,
    TripartiteState,
    apply_local_3,
    cayley_det,
    cayley_det_schlafli,
    classify,
    display_normalize,
    sub_concurrences2,
    submatrix,
)
from tritangle.catalog import ghz_state, ghz_to_psi_unitary, psi_state, w_state
from tritangle.randstates import random_generic_state
from tritangle.scalars import abs2


def test_submatrix_w_x0():
    sub = submatrix(w_state(), Axis.X, 0)
    assert sub.amps == tuple(map(GaussianRational, (0, 1, 1, 0)))
    assert sub.scale2 == Fraction(1, 3)


def test_submatrix_ghz_z0():
    sub = submatrix(ghz_state(), Axis.Z, 0)
    assert sub.amps == tuple(map(GaussianRational, (1, 0, 0, 0)))


def test_submatrix_psi_x1():
    sub = submatrix(psi_state(), Axis.X, 1)
    assert sub.amps == tuple(
        GaussianRational(v) for v in (Fraction(1, 2), 0, 0, Fraction(1, 2))
    )
    assert sub.scale2 == psi_state().scale2


def test_cayley_det_ghz():
    ghz = ghz_state()
    assert cayley_det(ghz) == GaussianRational(1)
    # degree 4: the physical value carries scale2^2
    assert ghz.scale2 ** 2 * cayley_det(ghz).re == Fraction(1, 4)


def test_cayley_det_w_vanishes():
    assert cayley_det(w_state()) == GaussianRational(0)


def test_cayley_det_psi():
    vec = classify(psi_state())
    assert vec.det_abs2 == Fraction(1, 16)  # |Det| = 1/4 on the normalized state


def test_schlafli_hand_values():
    # z-pencil of GHZ: alpha = 0, gamma = 0, beta = 1  ->  discriminant 1
    assert cayley_det_schlafli(ghz_state()) == GaussianRational(1)
    # every pencil coefficient of W vanishes
    assert cayley_det_schlafli(w_state()) == GaussianRational(0)


def test_schlafli_matches_on_random_integer_hypermatrices():
    rng = random.Random(99)
    for _ in range(2000):
        amps = tuple(GaussianRational(rng.randint(-9, 9)) for _ in range(8))
        if not any(map(bool, amps)):
            continue
        s = TripartiteState(amps, Fraction(1))
        assert cayley_det(s) == cayley_det_schlafli(s)


def test_sub_concurrences_w():
    ninth = Fraction(1, 9)  # squared value of C = 1/3
    assert sub_concurrences2(w_state()) == (ninth, 0, ninth, 0, ninth, 0)


def test_sub_concurrences_ghz_all_zero():
    assert sub_concurrences2(ghz_state()) == (0,) * 6


def test_sub_concurrences_psi_all_equal():
    sixteenth = Fraction(1, 16)  # squared value of C = 1/4
    assert sub_concurrences2(psi_state()) == (sixteenth,) * 6


def test_classify_product_state_all_zero():
    x, y, z = (1, 2), (3, -1), (1, 1)
    amps = tuple(
        GaussianRational(x[i] * y[j] * z[k])
        for i in range(2)
        for j in range(2)
        for k in range(2)
    )
    vec = classify(TripartiteState(amps, Fraction(1)))
    assert vec.det_abs2 == 0
    assert vec.sub2 == (0,) * 6


def test_classify_phi_state():
    phi = TripartiteState.exact(
        (1, 0, 0, 1, 0, 1, 1, 0), scale2=Fraction(1, 4)
    )
    vec = classify(phi)
    assert vec.det_abs2 == Fraction(1, 16)
    assert vec.sub2 == (Fraction(1, 16),) * 6
    assert display_normalize(vec) == (1.0,) * 7


def test_classify_ghz_normalized_values():
    vec = classify(ghz_state())
    assert vec.det_abs2 == Fraction(1, 16)
    assert vec.sub2 == (0,) * 6
    assert vec.computed_on_normalized


def test_display_normalize_rows():
    assert display_normalize(classify(ghz_state())) == (1.0, 0, 0, 0, 0, 0, 0)
    assert display_normalize(classify(w_state())) == (0, 1.0, 0, 1.0, 0, 1.0, 0)


def test_display_normalize_all_zero_vector():
    basis = TripartiteState.exact((1, 0, 0, 0, 0, 0, 0, 0))
    assert display_normalize(classify(basis)) == (0.0,) * 7


def test_homogeneity_of_det_and_subs():
    rng = random.Random(23)
    for _ in range(200):
        s = random_generic_state(rng)
        k = GaussianRational(Fraction(rng.randint(1, 5), rng.randint(1, 3)), rng.randint(-2, 2))
        scaled = s.scale(k)
        k2 = k.abs2()
        assert abs2(cayley_det(scaled)) == k2 ** 4 * abs2(cayley_det(s))
        assert sub_concurrences2(scaled) == tuple(k2 ** 2 * v for v in sub_concurrences2(s))
        # the normalized classification ignores scaling entirely
        assert classify(scaled) == classify(s)


def _permuted(state, perm):
    amps = [None] * 8
    for i in range(2):
        for j in range(2):
            for k in range(2):
                src = (i, j, k)
                dst = tuple(src[p] for p in perm)
                amps[4 * dst[0] + 2 * dst[1] + dst[2]] = state.amp(i, j, k)
    return TripartiteState(tuple(amps), state.scale2)


def test_det_symmetric_under_qubit_exchange():
    rng = random.Random(31)
    for _ in range(300):
        s = random_generic_state(rng)
        base = cayley_det(s)
        for perm in itertools.permutations(range(3)):
            assert cayley_det(_permuted(s, perm)) == base


def test_sub_concurrences_not_locally_invariant():
    # GHZ has all six sub-concurrences zero, but its image under the
    # catalog rotation on every qubit has all six equal to 1/4: equal
    # hyperdeterminant, different collapse behaviour.
    u = ghz_to_psi_unitary()
    rotated = apply_local_3(ghz_state(), u, u, u)
    vec_before = classify(ghz_state())
    vec_after = classify(rotated)
    assert vec_before.det_abs2 == vec_after.det_abs2 == Fraction(1, 16)
    assert vec_before.sub2 == (0,) * 6
    assert vec_after.sub2 == (Fraction(1, 16),) * 6
