# GHZ and psi are images of each other under one local rotation applied to
# every qubit, yet their classifications differ in the six sub-entries:
# |Det| is locally invariant, the sub-concurrences are not.
from tritangle import apply_local_3, classify, display_normalize, state_to_ket
from tritangle.catalog import ghz_state, ghz_to_psi_unitary, psi_state

ghz = ghz_state()
u = ghz_to_psi_unitary()
print("rotation entries :", [str(e) for e in u.entries], "scale2 =", u.scale2)

image = apply_local_3(ghz, u, u, u)
print("GHZ              :", state_to_ket(ghz))
print("rotated GHZ      :", state_to_ket(image))
print("psi              :", state_to_ket(psi_state()))

for name, state in (("GHZ", ghz), ("rotated", image)):
    d = display_normalize(classify(state))
    print(f"{name:8s} display  : [{d[0]:g}; {', '.join(f'{v:g}' for v in d[1:])}]")

# Undo the rotation with its adjoint.
back = apply_local_3(image, u.dagger(), u.dagger(), u.dagger())
print("rotated back     :", state_to_ket(back))
