"""Projective measurement of one qubit in the computational basis.

Measuring qubit ``axis`` of a three-qubit state and reading ``outcome``
collapses the remaining pair onto the corresponding 2x2 slice of the
amplitude hypermatrix.  The outcome probability is the squared-norm
fraction carried by that slice, and the residual pair's concurrence equals
the matching sub-concurrence of the original state.

Measurement in an arbitrary product basis is expressed by applying local
unitaries first and collapsing afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bipartite import concurrence2
from .errors import ImpossibleOutcome
from .hyperdet import _sub_amps
from .scalars import DEFAULT_EPS, abs2
from .states import Axis, BipartiteState, TripartiteState, _check_outcome


@dataclass(frozen=True)
class CollapseResult:
    """Outcome probability, residual two-qubit state, and its entanglement.

    ``concurrence2`` is the squared concurrence of the normalized residual
    (rational in the exact backend); ``concurrence()`` gives the float.
    """

    prob: Fraction | float
    post_state: BipartiteState
    concurrence2: Fraction | float

    def concurrence(self) -> float:
        return math.sqrt(float(self.concurrence2))


def collapse(
    state: TripartiteState, axis: Axis, outcome: int, eps: float = DEFAULT_EPS
) -> CollapseResult:
    """Measure one qubit and keep the stated outcome.

    Raises :class:`ImpossibleOutcome` when the outcome carries zero
    probability (exactly, or below eps relative to the state norm in the
    approx backend): the residual would be the zero vector.
    """
    _check_outcome(outcome)
    amps = _sub_amps(state, axis, outcome)
    n2 = state.norm2()
    slice_norm2 = state.scale2 * sum(abs2(a) for a in amps)
    if state.backend == "exact":
        impossible = slice_norm2 == 0
    else:
        impossible = slice_norm2 <= eps * n2
    if impossible:
        raise ImpossibleOutcome(
            f"outcome {outcome} on qubit {axis.qubit} has probability 0"
        )
    post = BipartiteState(amps, state.scale2)
    return CollapseResult(slice_norm2 / n2, post, concurrence2(post))
