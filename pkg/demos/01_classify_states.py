# Classify the canonical three-qubit states and print the seven-element
# list [|Det|; Cx0, Cx1, Cy0, Cy1, Cz0, Cz1] for each.
from tritangle import classify, display_normalize, is_separable, parse_state

EXPRESSIONS = {
    "product": "3|000> + 3|001> - |010> - |011> + 6|100> + 6|101> - 2|110> - 2|111>",
    "W": "(|001> + |100> + |010>)/sqrt(3)",
    "GHZ": "(|000> + |111>)/sqrt(2)",
    "psi": "1/2(|100> + |010> + |001> + |111>)",
    "phi": "1/2(|000> + |011> + |101> + |110>)",
    "cluster": "(|000>+|001>+|100>+|101>+|010>-|011>-|110>+|111>)/sqrt(8)",
}

for name, expr in EXPRESSIONS.items():
    state = parse_state(expr)
    vec = classify(state)
    display = display_normalize(vec)
    print(f"{name:8s} |Det|^2 = {vec.det_abs2!s:6s} display = "
          f"[{display[0]:g}; {', '.join(f'{v:g}' for v in display[1:])}]"
          f"  separable = {is_separable(state)}")

# The leading entry separates the GHZ-like class (1) from everything else;
# the six sub-entries record which measurement outcomes leave the remaining
# pair entangled.  All seven vanish only for the product state.
