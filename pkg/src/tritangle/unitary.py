"""2x2 unitaries and their local (per-qubit) action on states.

A ``Unitary2`` is a 2x2 matrix M together with ``scale2``, the squared
modulus of a global prefactor g, the physical operator being g*M with
|g|^2 = scale2.  Exact-backend matrices have Gaussian-rational entries and
rational scale2 (e.g. entries [[1,1],[-1,1]] with scale2 = 1/2 for a
1/sqrt(2) prefactor); Haar-random sampling produces double-backend
matrices.

Index convention: a unitary acts on its tensor slot by

    e_i  ->  sum_k  M[i][k] e_k

so the coefficient matrix of a two-qubit state transforms as
c' = M1^T c M2.  Under this convention the rotation [[1,1],[-1,1]] with
scale2 = 1/2, applied to all three qubits, maps the GHZ state onto the
single-excitation state (|100> + |010> + |001> + |111>)/2 (see
``tritangle.catalog.ghz_to_psi_unitary``).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BackendMismatch
from .scalars import GaussianRational, abs2, as_approx, as_exact, is_exact_scalar
from .states import BipartiteState, TripartiteState

#: Maximum allowed entry of |U^dagger U - I| for double-backend matrices.
UNITARITY_TOL = 1e-12


@dataclass(frozen=True)
class Unitary2:
    """2x2 unitary as (entries m00, m01, m10, m11; squared prefactor)."""

    entries: tuple
    scale2: Fraction | float = Fraction(1)

    def __post_init__(self):
        if len(self.entries) != 4:
            raise ValueError("a 2x2 matrix needs exactly 4 entries")
        exact = is_exact_scalar(self.entries[0])
        for e in self.entries:
            if is_exact_scalar(e) != exact:
                raise BackendMismatch("matrix entries mix backends")
        if exact != isinstance(self.scale2, Fraction):
            raise BackendMismatch("scale2 backend must match the entries")
        if self.scale2 <= 0:
            raise ValueError("scale2 must be positive")
        self._check_unitarity()

    def _check_unitarity(self):
        m00, m01, m10, m11 = self.entries
        # M^dagger M entries; must equal (1/scale2) * I.
        g00 = abs2(m00) + abs2(m10)
        g11 = abs2(m01) + abs2(m11)
        g01 = m00.conjugate() * m01 + m10.conjugate() * m11
        if self.backend == "exact":
            target = 1 / self.scale2
            if g00 != target or g11 != target or bool(g01):
                raise ValueError("matrix is not unitary (with its scale2)")
        else:
            target = 1.0 / self.scale2
            residual = max(abs(g00 - target), abs(g11 - target), abs(g01))
            if residual * self.scale2 > UNITARITY_TOL:
                raise ValueError(
                    f"matrix is not unitary: residual {residual * self.scale2:.3e}"
                )

    @property
    def backend(self) -> str:
        return "exact" if is_exact_scalar(self.entries[0]) else "approx"

    @classmethod
    def exact(cls, rows, scale2=1) -> "Unitary2":
        (m00, m01), (m10, m11) = rows
        return cls(tuple(as_exact(m) for m in (m00, m01, m10, m11)), Fraction(scale2))

    @classmethod
    def approx(cls, rows, scale2=1.0) -> "Unitary2":
        (m00, m01), (m10, m11) = rows
        return cls(tuple(as_approx(m) for m in (m00, m01, m10, m11)), float(scale2))

    @classmethod
    def identity(cls, backend: str = "exact") -> "Unitary2":
        if backend == "exact":
            return cls.exact([[1, 0], [0, 1]])
        return cls.approx([[1.0, 0.0], [0.0, 1.0]])

    def dagger(self) -> "Unitary2":
        m00, m01, m10, m11 = self.entries
        return Unitary2(
            (m00.conjugate(), m10.conjugate(), m01.conjugate(), m11.conjugate()),
            self.scale2,
        )

    def entry(self, i: int, k: int):
        return self.entries[2 * i + k]

    def to_approx(self) -> "Unitary2":
        """Explicit one-way conversion to the double backend."""
        if self.backend == "approx":
            return self
        return Unitary2(tuple(e.to_complex() for e in self.entries), float(self.scale2))

    def to_matrix(self) -> np.ndarray:
        """Physical operator g*M as a dense complex array."""
        g = math.sqrt(float(self.scale2))
        m = [as_approx(e) for e in self.entries]
        return g * np.array([[m[0], m[1]], [m[2], m[3]]], dtype=complex)


def _require_same_backend(state, *units):
    for u in units:
        if u.backend != state.backend:
            raise BackendMismatch(
                f"cannot apply a {u.backend} unitary to a {state.backend} state"
            )


def apply_local_3(
    state: TripartiteState, u1: Unitary2, u2: Unitary2, u3: Unitary2
) -> TripartiteState:
    """Apply u1 (x) u2 (x) u3, one factor per qubit.

    New amplitudes: a'_lmn = sum_ijk a_ijk u1[i][l] u2[j][m] u3[k][n];
    the result's scale2 is the product of all four scale2 values, so the
    squared norm is preserved exactly.
    """
    _require_same_backend(state, u1, u2, u3)
    amps = []
    for l in range(2):
        for m in range(2):
            for n in range(2):
                acc = None
                for i in range(2):
                    for j in range(2):
                        for k in range(2):
                            term = (
                                state.amp(i, j, k)
                                * u1.entry(i, l)
                                * u2.entry(j, m)
                                * u3.entry(k, n)
                            )
                            acc = term if acc is None else acc + term
                amps.append(acc)
    scale2 = state.scale2 * u1.scale2 * u2.scale2 * u3.scale2
    return TripartiteState(tuple(amps), scale2)


def apply_local_2(state: BipartiteState, u1: Unitary2, u2: Unitary2) -> BipartiteState:
    """Apply u1 (x) u2 to a two-qubit state: c' = M1^T c M2 on amplitudes."""
    _require_same_backend(state, u1, u2)
    amps = []
    for k in range(2):
        for m in range(2):
            acc = None
            for i in range(2):
                for j in range(2):
                    term = state.amp(i, j) * u1.entry(i, k) * u2.entry(j, m)
                    acc = term if acc is None else acc + term
            amps.append(acc)
    return BipartiteState(tuple(amps), state.scale2 * u1.scale2 * u2.scale2)


def random_unitary2(rng) -> Unitary2:
    """Haar-distributed double-backend unitary.

    Accepts a ``numpy.random.Generator`` or an integer seed.  Construction:
    U = e^{i phi} [[e^{i a} cos t, e^{i b} sin t],
                   [-e^{-i b} sin t, e^{-i a} cos t]]
    with phi, a, b uniform on [0, 2pi) and t = arcsin(sqrt(u)), u uniform
    on [0, 1), which gives the Haar measure on U(2) up to global phase.
    """
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    alpha, beta, phi = rng.uniform(0.0, 2.0 * math.pi, size=3)
    theta = math.asin(math.sqrt(rng.uniform(0.0, 1.0)))
    c, s = math.cos(theta), math.sin(theta)
    phase = cmath.exp(1j * phi)
    return Unitary2.approx(
        [
            [phase * cmath.exp(1j * alpha) * c, phase * cmath.exp(1j * beta) * s],
            [-phase * cmath.exp(-1j * beta) * s, phase * cmath.exp(-1j * alpha) * c],
        ]
    )


def random_rational_unitary2(rng) -> Unitary2:
    """Exact-backend unitary [[a, b], [-conj(b), conj(a)]] / sqrt(|a|^2+|b|^2).

    ``rng`` is a ``random.Random``; entries are small Gaussian rationals,
    and scale2 = 1 / (|a|^2 + |b|^2) makes the matrix exactly unitary.
    """
    while True:
        a = GaussianRational(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
        )
        b = GaussianRational(
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
        )
        n = a.abs2() + b.abs2()
        if n:
            break
    return Unitary2.exact([[a, b], [-b.conjugate(), a.conjugate()]], Fraction(1, 1) / n)
