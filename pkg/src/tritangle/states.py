"""State containers for two- and three-qubit pure states.

Amplitudes are stored in lexicographic basis order (``|000>`` .. ``|111>``
for three qubits, ``|00>`` .. ``|11>`` for two).  Irrational global
prefactors such as 1/sqrt(2) are carried exactly through ``scale2``, the
*squared modulus* of the prefactor: the GHZ state is ``amps=(1,0,...,0,1)``
with ``scale2=1/2``.  Every classification quantity used downstream is
homogeneous, so this rational bookkeeping suffices for exact zero tests.

States are immutable; all operations return new values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import BackendMismatch, ZeroScale
from .scalars import GaussianRational, abs2, as_approx, as_exact, is_exact_scalar


class Axis(enum.Enum):
    """Which qubit a single-qubit operation addresses.

    X is the first tensor slot (index i of a_ijk), Y the second (j),
    Z the third (k).
    """

    X = 0
    Y = 1
    Z = 2

    @property
    def qubit(self) -> int:
        """1-based qubit position, as used on the command line."""
        return self.value + 1

    @classmethod
    def from_qubit(cls, n: int) -> "Axis":
        if n not in (1, 2, 3):
            raise ValueError(f"qubit must be 1, 2 or 3, got {n}")
        return cls(n - 1)


#: Canonical ordering of the six (axis, outcome) slots used by the
#: classification list: x0, x1, y0, y1, z0, z1.
AXIS_OUTCOME_ORDER = (
    (Axis.X, 0),
    (Axis.X, 1),
    (Axis.Y, 0),
    (Axis.Y, 1),
    (Axis.Z, 0),
    (Axis.Z, 1),
)


def _check_outcome(outcome: int) -> int:
    if outcome not in (0, 1):
        raise ValueError(f"outcome must be 0 or 1, got {outcome}")
    return outcome


def _validate(amps, scale2, n):
    if len(amps) != n:
        raise ValueError(f"expected {n} amplitudes, got {len(amps)}")
    exact = is_exact_scalar(amps[0])
    for a in amps:
        if is_exact_scalar(a) != exact:
            raise BackendMismatch("amplitudes mix exact and double backends")
    if exact:
        if not isinstance(scale2, Fraction):
            raise BackendMismatch("exact states need a Fraction scale2")
    else:
        if isinstance(scale2, Fraction):
            raise BackendMismatch("double states need a float scale2")
    if scale2 <= 0:
        raise ValueError("scale2 must be positive")
    if not any(bool(a) if exact else a != 0 for a in amps):
        raise ValueError("the zero vector is not a state")


def _coerce_exact_amps(amps):
    return tuple(as_exact(a) for a in amps)


def _coerce_approx_amps(amps):
    return tuple(as_approx(a) for a in amps)


class _StateOps:
    """Shared behaviour of the two state containers."""

    @property
    def backend(self) -> str:
        return "exact" if is_exact_scalar(self.amps[0]) else "approx"

    def norm2(self):
        """Squared norm, scale2 * sum of squared amplitude moduli."""
        total = abs2(self.amps[0])
        for a in self.amps[1:]:
            total = total + abs2(a)
        return self.scale2 * total

    def scale(self, k):
        """Multiply every amplitude by the nonzero scalar k."""
        if self.backend == "exact":
            k = as_exact(k)
            if not k:
                raise ZeroScale("cannot scale a state by zero")
        else:
            k = as_approx(k)
            if k == 0:
                raise ZeroScale("cannot scale a state by zero")
        return type(self)(tuple(a * k for a in self.amps), self.scale2)

    def to_approx(self):
        """Explicit one-way conversion to the double backend."""
        if self.backend == "approx":
            return self
        return type(self).approx(
            tuple(a.to_complex() for a in self.amps), float(self.scale2)
        )


@dataclass(frozen=True)
class TripartiteState(_StateOps):
    """Three-qubit pure state: 8 amplitudes a_ijk plus squared prefactor."""

    amps: tuple
    scale2: Fraction | float = Fraction(1)

    def __post_init__(self):
        _validate(self.amps, self.scale2, 8)

    @classmethod
    def exact(cls, amps, scale2=1) -> "TripartiteState":
        return cls(_coerce_exact_amps(amps), Fraction(scale2))

    @classmethod
    def approx(cls, amps, scale2=1.0) -> "TripartiteState":
        return cls(_coerce_approx_amps(amps), float(scale2))

    def amp(self, i: int, j: int, k: int):
        return self.amps[4 * i + 2 * j + k]


@dataclass(frozen=True)
class BipartiteState(_StateOps):
    """Two-qubit pure state: 4 amplitudes c_ij plus squared prefactor."""

    amps: tuple
    scale2: Fraction | float = Fraction(1)

    def __post_init__(self):
        _validate(self.amps, self.scale2, 4)

    @classmethod
    def exact(cls, amps, scale2=1) -> "BipartiteState":
        return cls(_coerce_exact_amps(amps), Fraction(scale2))

    @classmethod
    def approx(cls, amps, scale2=1.0) -> "BipartiteState":
        return cls(_coerce_approx_amps(amps), float(scale2))

    def amp(self, i: int, j: int):
        return self.amps[2 * i + j]


# -- JSON interchange -------------------------------------------------------
#
# {"amps": [[re, im], ...], "scale2": "p/q" | float, "backend": "exact"|"approx"}
# with re/im as rational strings in exact mode and numbers in approx mode.


def state_to_json(state) -> dict:
    if state.backend == "exact":
        amps = [[str(a.re), str(a.im)] for a in state.amps]
        scale2 = str(state.scale2)
    else:
        amps = [[a.real, a.imag] for a in state.amps]
        scale2 = float(state.scale2)
    return {"amps": amps, "scale2": scale2, "backend": state.backend}


def state_from_json(obj: dict):
    amps_raw = obj["amps"]
    if len(amps_raw) not in (4, 8):
        raise ValueError("state JSON must carry 4 or 8 amplitudes")
    cls = TripartiteState if len(amps_raw) == 8 else BipartiteState
    backend = obj.get("backend", "exact")
    if backend == "exact":
        amps = tuple(
            GaussianRational(Fraction(str(re)), Fraction(str(im)))
            for re, im in amps_raw
        )
        return cls(amps, Fraction(str(obj.get("scale2", "1"))))
    amps = tuple(complex(float(re), float(im)) for re, im in amps_raw)
    return cls(amps, float(obj.get("scale2", 1.0)))
