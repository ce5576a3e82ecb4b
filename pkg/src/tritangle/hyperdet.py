"""Three-qubit classification: hyperdeterminant and sub-concurrences.

A three-qubit pure state is summarized by an ordered list of seven
nonnegative numbers,

    [ |Det A| ; C_x0, C_x1, C_y0, C_y1, C_z0, C_z1 ]

where A = (a_ijk) is the 2x2x2 amplitude hypermatrix, Det is its degree-4
hyperdeterminant, and C_(axis,outcome) is the modulus of the determinant of
the 2x2 submatrix obtained by freezing that axis to that outcome.  The list
vanishes identically exactly when the state is a product of three one-qubit
factors; Det alone separates the GHZ-like class (Det != 0) from everything
else, and the six sub-entries record which single-qubit measurement
outcomes leave the remaining pair entangled.

Exact backend stores squared moduli (|Det|^2, C^2) so that every entry is a
rational and zero tests are exact; square roots are taken only in the
float display layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .scalars import DEFAULT_EPS, abs2
from .states import AXIS_OUTCOME_ORDER, Axis, BipartiteState, TripartiteState, _check_outcome


def submatrix(state: TripartiteState, axis: Axis, outcome: int) -> BipartiteState:
    """2x2 slice of the hypermatrix with ``axis`` frozen to ``outcome``.

    The first remaining index becomes the row, the second the column; the
    global scale2 is carried over unchanged.  Raises ValueError when every
    entry of the slice is zero (the zero vector is not a valid state);
    :func:`tritangle.measurement.collapse` reports that case as an
    impossible measurement outcome.
    """
    _check_outcome(outcome)
    a = state.amp
    if axis is Axis.X:
        amps = (a(outcome, 0, 0), a(outcome, 0, 1), a(outcome, 1, 0), a(outcome, 1, 1))
    elif axis is Axis.Y:
        amps = (a(0, outcome, 0), a(0, outcome, 1), a(1, outcome, 0), a(1, outcome, 1))
    else:
        amps = (a(0, 0, outcome), a(0, 1, outcome), a(1, 0, outcome), a(1, 1, outcome))
    return BipartiteState(amps, state.scale2)


def _sub_amps(state, axis, outcome):
    # Same slicing as submatrix() without constructing a (possibly invalid,
    # all-zero) BipartiteState.
    a = state.amp
    if axis is Axis.X:
        return (a(outcome, 0, 0), a(outcome, 0, 1), a(outcome, 1, 0), a(outcome, 1, 1))
    if axis is Axis.Y:
        return (a(0, outcome, 0), a(0, outcome, 1), a(1, outcome, 0), a(1, outcome, 1))
    return (a(0, 0, outcome), a(0, 1, outcome), a(1, 0, outcome), a(1, 1, outcome))


def cayley_det(state: TripartiteState):
    """Degree-4 hyperdeterminant of the raw amplitude hypermatrix.

    With the four antipodal products p0 = a000*a111, p1 = a001*a110,
    p2 = a010*a101, p3 = a011*a100 this is

        p0^2 + p1^2 + p2^2 + p3^2
        - 2 (p0 p1 + p0 p2 + p0 p3 + p1 p2 + p1 p3 + p2 p3)
        + 4 (a000 a011 a101 a110 + a001 a010 a100 a111)

    normalized so that amplitudes a000 = a111 = 1 give +1.  The value is
    for the raw amplitudes; the hyperdeterminant of the physical state is
    scale2^2 times this (degree 4), and callers normalize by norm2^2.
    """
    a000, a001, a010, a011, a100, a101, a110, a111 = state.amps
    p0 = a000 * a111
    p1 = a001 * a110
    p2 = a010 * a101
    p3 = a011 * a100
    squares = p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3
    pairs = p0 * p1 + p0 * p2 + p0 * p3 + p1 * p2 + p1 * p3 + p2 * p3
    quads = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111
    return squares - 2 * pairs + 4 * quads


def cayley_det_schlafli(state: TripartiteState):
    """Independent evaluation of the hyperdeterminant via the z-pencil.

    Writes q(z0, z1) = det(z0 * A_z0 + z1 * A_z1) = alpha z0^2 +
    beta z0 z1 + gamma z1^2 and returns the discriminant
    beta^2 - 4 alpha gamma, which equals :func:`cayley_det` identically
    (same sign convention: amplitudes a000 = a111 = 1 give +1).
    """
    a000, a001, a010, a011, a100, a101, a110, a111 = state.amps
    alpha = a000 * a110 - a010 * a100
    gamma = a001 * a111 - a011 * a101
    beta = a000 * a111 + a001 * a110 - a010 * a101 - a011 * a100
    return beta * beta - 4 * alpha * gamma


def sub_concurrences2(state: TripartiteState) -> tuple:
    """Squared sub-determinant moduli |det A_(axis,outcome)|^2 * scale2^2.

    Ordered x0, x1, y0, y1, z0, z1.  The degree-2 scale2 factor is applied;
    division by norm2 (normalization) is left to :func:`classify`.
    """
    s2 = state.scale2 * state.scale2
    out = []
    for axis, outcome in AXIS_OUTCOME_ORDER:
        c00, c01, c10, c11 = _sub_amps(state, axis, outcome)
        out.append(s2 * abs2(c00 * c11 - c01 * c10))
    return tuple(out)


@dataclass(frozen=True)
class ClassificationVector:
    """The seven-element classification, stored as squared moduli.

    ``det_abs2`` is |Det|^2 and ``sub2`` the six squared sub-concurrences
    (order x0, x1, y0, y1, z0, z1), all for the normalized state when
    ``computed_on_normalized`` is set.  Rational in the exact backend,
    floats in the approx backend.
    """

    det_abs2: Fraction | float
    sub2: tuple
    computed_on_normalized: bool = True

    def values2(self) -> tuple:
        """All seven squared entries, hyperdeterminant first."""
        return (self.det_abs2,) + self.sub2

    @property
    def backend(self) -> str:
        return "exact" if isinstance(self.det_abs2, Fraction) else "approx"

    def is_zero(self, eps: float = DEFAULT_EPS) -> bool:
        """True when every entry vanishes (exactly, or within eps)."""
        if self.backend == "exact":
            return all(v == 0 for v in self.values2())
        return all(v <= eps for v in self.values2())


def classify(state: TripartiteState, normalized: bool = True) -> ClassificationVector:
    """Evaluate the seven-element classification of the state.

    With ``normalized`` (the default) the quantities refer to the
    unit-norm state: the degree-4 hyperdeterminant is divided by norm2^2
    and each degree-2 sub-determinant by norm2, i.e. the squared entries
    by norm2^4 and norm2^2 respectively.
    """
    s2 = state.scale2
    det_abs2 = abs2(cayley_det(state)) * s2 * s2 * s2 * s2
    sub2 = sub_concurrences2(state)
    if normalized:
        n2 = state.norm2()
        n4 = n2 * n2
        det_abs2 = det_abs2 / (n4 * n4)
        sub2 = tuple(v / n4 for v in sub2)
    return ClassificationVector(det_abs2, sub2, computed_on_normalized=normalized)


def display_normalize(vec: ClassificationVector, eps: float = DEFAULT_EPS) -> tuple:
    """Unsquared, rescaled presentation of a classification vector.

    Divides every entry by |Det| when that is nonzero (so the leading
    entry reads 1), otherwise by the largest sub-concurrence (so the
    largest surviving entry reads 1), otherwise returns all zeros.  The
    result is a 7-tuple of floats; the leading entry is always 0 or 1.
    """
    exact = vec.backend == "exact"

    def nonzero(v):
        return v != 0 if exact else v > eps

    if nonzero(vec.det_abs2):
        div2 = vec.det_abs2
    elif any(nonzero(v) for v in vec.sub2):
        div2 = max(vec.sub2)
    else:
        return (0.0,) * 7
    out = []
    for v in vec.values2():
        out.append(math.sqrt(float(v / div2)) if nonzero(v) else 0.0)
    return tuple(out)
