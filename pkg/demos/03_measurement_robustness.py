# Measure each qubit of GHZ, W and psi and inspect the residual pair.
# GHZ always collapses to a product pair; W stays maximally entangled on
# outcome 0 and separates on outcome 1; psi stays maximally entangled on
# every outcome.
from tritangle import Axis, collapse
from tritangle.catalog import ghz_state, psi_state, w_state

for name, state in (("GHZ", ghz_state()), ("W", w_state()), ("psi", psi_state())):
    print(name)
    for axis in Axis:
        for outcome in (0, 1):
            r = collapse(state, axis, outcome)
            print(f"  qubit {axis.qubit} -> {outcome}:  prob = {r.prob!s:4s} "
                  f"residual concurrence = {r.concurrence():g}")
