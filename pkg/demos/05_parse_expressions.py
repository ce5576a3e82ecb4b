# Tour of the ket-expression grammar: exact rational coefficients,
# square-root prefactors, complex units, and the errors the parser reports.
from tritangle import (
    EmptyState,
    KetSyntaxError,
    MixedArity,
    UnsupportedIrrational,
    parse,
    parse_state,
    render,
    state_to_ket,
)

GOOD = [
    "(|000> + |111>)/sqrt(2)",
    "1/2(|100>+|010>+|001>+|111>)",
    "1/sqrt(3)(|001>+|100>+|010>)",
    "i/2|01> - 1/2|10>",
    "1/sqrt(2)|00> + 1/sqrt(8)|11>",
    "|00> + |00>",
]
for text in GOOD:
    state = parse_state(text)
    print(f"{text:40s} -> {state_to_ket(state)}  (norm2 = {state.norm2()})")

print()
BAD = ["|00", "|00> + |000>", "(|00> - |00>)", "1/sqrt(2)|00> + 1/2|11>"]
for text in BAD:
    try:
        parse(text)
    except (KetSyntaxError, MixedArity, EmptyState, UnsupportedIrrational) as exc:
        print(f"{text:30s} -> {type(exc).__name__}: {exc}")

print()
expr = parse("i|01> - |10>")
print("render round trip:", render(expr))
