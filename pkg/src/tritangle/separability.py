"""Exact full-separability test, factor extraction, and a rank-1 oracle.

A three-qubit pure state factors into three one-qubit states exactly when
its seven-element classification vanishes identically: hyperdeterminant
zero and all six sub-determinants zero.  This module decides that
condition, extracts the factors explicitly when it holds, and provides an
independent brute-force criterion (every 2x2 minor of every axis
flattening of the hypermatrix vanishes, i.e. the hypermatrix has rank 1)
for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotSeparable, ResidualNonzero
from .hyperdet import classify
from .scalars import DEFAULT_EPS, abs2
from .states import TripartiteState


def is_separable(state: TripartiteState, eps: float = DEFAULT_EPS) -> bool:
    """True when the state is a product of three one-qubit factors.

    Exact backend: all seven squared classification entries equal zero.
    Approx backend: all seven (normalized) entries at most eps.
    """
    return classify(state).is_zero(eps)


@dataclass(frozen=True)
class Factorization:
    """One-qubit factors (fx, fy, fz) whose outer product gives the amps.

    Each factor is a pair of scalars; amplitudes satisfy
    a_ijk = fx[i] * fy[j] * fz[k] exactly in the exact backend.  The global
    prefactor of the original state (sqrt of its scale2) is not folded into
    the factors; display layers may attach it to any one factor.
    """

    fx: tuple
    fy: tuple
    fz: tuple

    def amplitudes(self) -> tuple:
        return tuple(
            self.fx[i] * self.fy[j] * self.fz[k]
            for i in range(2)
            for j in range(2)
            for k in range(2)
        )


def extract_factors(state: TripartiteState, eps: float = DEFAULT_EPS) -> Factorization:
    """Split a separable state into its three one-qubit factors.

    Anchors on a nonzero amplitude a* = a(i*, j*, k*) and reads the factors
    off the hypermatrix lines through it:

        fx[i] = a(i, j*, k*),   fy[j] = a(i*, j, k*) / a*,
        fz[k] = a(i*, j*, k) / a*.

    The outer product is then verified against all eight amplitudes.
    Raises :class:`NotSeparable` when the state fails the separability
    test and :class:`ResidualNonzero` if verification fails (impossible
    for states that pass the test; kept as an internal-consistency guard).
    """
    if not is_separable(state, eps):
        raise NotSeparable("state is not a product of one-qubit factors")
    exact = state.backend == "exact"
    triples = [(i, j, k) for i in range(2) for j in range(2) for k in range(2)]
    if exact:
        anchor_idx = next(t for t in triples if state.amp(*t))
    else:
        anchor_idx = max(triples, key=lambda t: abs2(state.amp(*t)))
    ai, aj, ak = anchor_idx
    anchor = state.amp(ai, aj, ak)
    fx = (state.amp(0, aj, ak), state.amp(1, aj, ak))
    fy = (state.amp(ai, 0, ak) / anchor, state.amp(ai, 1, ak) / anchor)
    fz = (state.amp(ai, aj, 0) / anchor, state.amp(ai, aj, 1) / anchor)
    fact = Factorization(fx, fy, fz)
    rebuilt = fact.amplitudes()
    if exact:
        ok = all(rebuilt[n] == state.amps[n] for n in range(8))
    else:
        biggest = max(abs(a) for a in state.amps)
        ok = all(abs(rebuilt[n] - state.amps[n]) <= 1e-9 * max(1.0, biggest) for n in range(8))
    if not ok:
        raise ResidualNonzero("extracted factors do not reproduce the amplitudes")
    return fact


#: Column index pairs of a 2x4 matrix, for minor enumeration.
_COLUMN_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _flattenings(state):
    a = state.amp
    rows_x = (
        (a(0, 0, 0), a(0, 0, 1), a(0, 1, 0), a(0, 1, 1)),
        (a(1, 0, 0), a(1, 0, 1), a(1, 1, 0), a(1, 1, 1)),
    )
    rows_y = (
        (a(0, 0, 0), a(0, 0, 1), a(1, 0, 0), a(1, 0, 1)),
        (a(0, 1, 0), a(0, 1, 1), a(1, 1, 0), a(1, 1, 1)),
    )
    rows_z = (
        (a(0, 0, 0), a(0, 1, 0), a(1, 0, 0), a(1, 1, 0)),
        (a(0, 0, 1), a(0, 1, 1), a(1, 0, 1), a(1, 1, 1)),
    )
    return rows_x, rows_y, rows_z


def rank1_oracle(state: TripartiteState, eps: float = DEFAULT_EPS) -> bool:
    """Brute-force separability check: all 18 flattening minors vanish.

    Reshapes the hypermatrix into a 2x4 matrix along each of the three
    axes and requires every 2x2 minor (6 per flattening) to be zero, i.e.
    each flattening to have rank 1.  Evaluates nothing shared with the
    hyperdeterminant/sub-determinant path, so the two tests cross-check
    each other.
    """
    exact = state.backend == "exact"
    if not exact:
        n2 = state.norm2()
        bound = eps * n2 * n2 / (state.scale2 * state.scale2)
    for top, bottom in _flattenings(state):
        for p, q in _COLUMN_PAIRS:
            minor = top[p] * bottom[q] - top[q] * bottom[p]
            if exact:
                if minor:
                    return False
            elif abs2(minor) > bound:
                return False
    return True


def antipodal_pair_states() -> tuple:
    """The four unit-amplitude states pairing a ket with its bit complement.

    |000>+|111>, |010>+|101>, |110>+|001>, |100>+|011>, each with
    scale2 = 1/2.  Every one has all six sub-determinants zero yet a
    nonvanishing hyperdeterminant, so the six-entry list alone cannot
    certify separability; these are the canonical witnesses.
    """
    pairs = ((0, 7), (2, 5), (6, 1), (4, 3))
    out = []
    for hi, lo in pairs:
        amps = [0] * 8
        amps[hi] = 1
        amps[lo] = 1
        out.append(TripartiteState.exact(amps, scale2="1/2"))
    return tuple(out)
