"""Command-line front end.

Subcommands: classify, table, measure, transform, check-sep, factor,
random.  States are given as ket expressions (see
:mod:`tritangle.ketparser` for the grammar) or as a JSON file via
``--json-state``.  Results go to stdout (``--json`` for machine-readable
records); diagnostics go to stderr.

Exit codes: 0 success; 2 expression/JSON parse error; 3 precondition
failure (wrong qubit count for the command, impossible measurement
outcome, factoring a non-separable state); 4 exact/double backend
mismatch.
"""

from __future__ import annotations

import argparse
import json
import random as _random
import sys
from fractions import Fraction

from . import catalog
from .errors import (
    BackendMismatch,
    EmptyState,
    ImpossibleOutcome,
    KetSyntaxError,
    NotSeparable,
    TritangleError,
    UnsupportedIrrational,
    ZeroScale,
)
from .hyperdet import classify, display_normalize
from .ketparser import parse_state, state_to_ket
from .measurement import collapse
from .randstates import KINDS, random_tripartite
from .scalars import DEFAULT_EPS, GaussianRational, parse_rational
from .separability import extract_factors, is_separable, rank1_oracle
from .states import Axis, TripartiteState, state_from_json, state_to_json
from .unitary import Unitary2, apply_local_3

PARSE_ERROR, PRECONDITION_ERROR, BACKEND_ERROR = 2, 3, 4


def _enc(value):
    """JSON-encodable form: Fractions as strings, floats as numbers."""
    if isinstance(value, Fraction):
        return str(value)
    return value


def _enc_scalar(value):
    if isinstance(value, GaussianRational):
        return [str(value.re), str(value.im)]
    z = complex(value)
    return [z.real, z.imag]


def _fmt_display(display) -> str:
    head = f"{display[0]:g}"
    rest = ", ".join(f"{v:g}" for v in display[1:])
    return f"[{head}; {rest}]"


def _load_tripartite(args) -> TripartiteState:
    if getattr(args, "json_state", None):
        with open(args.json_state, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        try:
            state = state_from_json(raw)
        except (KeyError, TypeError, ValueError) as exc:
            raise KetSyntaxError(f"bad state JSON: {exc}", 0) from exc
    else:
        if args.expr is None:
            raise KetSyntaxError("no expression given", 0)
        state = parse_state(args.expr)
    if not isinstance(state, TripartiteState):
        raise _ArityError("this command needs a 3-qubit state")
    if getattr(args, "float", False):
        state = state.to_approx()
    return state


class _ArityError(TritangleError):
    pass


def _unitary_from_json(text: str) -> Unitary2:
    obj = json.loads(text)
    if isinstance(obj, list):
        obj = {"matrix": obj}
    try:
        matrix = obj["matrix"]
        root = obj.get("sqrt_scale2", 1)
        entries = []
        exact = not isinstance(root, float)
        for row in matrix:
            for cell in row:
                if isinstance(cell, str):
                    parts = cell.split(",")
                    re_raw, im_raw = parts[0], parts[1] if len(parts) > 1 else "0"
                    entries.append((parse_rational(re_raw), parse_rational(im_raw)))
                elif isinstance(cell, (list, tuple)):
                    entries.append((cell[0], cell[1]))
                    exact = exact and not any(isinstance(v, float) for v in cell)
                else:
                    entries.append((cell, 0))
                    exact = exact and not isinstance(cell, float)
        if len(entries) != 4:
            raise KetSyntaxError("unitary matrix must be 2x2", 0)
        if exact:
            amps = [
                GaussianRational(Fraction(str(re)), Fraction(str(im)))
                for re, im in entries
            ]
            return Unitary2(tuple(amps), Fraction(1) / Fraction(str(root)))
        amps = [complex(float(re), float(im)) for re, im in entries]
        return Unitary2(tuple(amps), 1.0 / float(root))
    except (KeyError, IndexError, TypeError, ZeroDivisionError) as exc:
        raise KetSyntaxError(f"bad unitary JSON: {exc}", 0) from exc


def _classification_record(state, eps):
    vec = classify(state)
    display = display_normalize(vec, eps)
    return vec, display, {
        "det_abs2": _enc(vec.det_abs2),
        "sub2": [_enc(v) for v in vec.sub2],
        "display": list(display),
        "separable": is_separable(state, eps),
    }


def cmd_classify(args) -> int:
    state = _load_tripartite(args)
    vec, display, record = _classification_record(state, args.eps)
    if args.json:
        print(json.dumps(record))
        return 0
    print(f"|Det|^2            : {_enc(vec.det_abs2)}")
    print(f"sub-concurrences^2 : {[_enc(v) for v in vec.sub2]}  (order x0 x1 y0 y1 z0 z1)")
    print(f"display            : {_fmt_display(display)}")
    print(f"separable          : {'yes' if record['separable'] else 'no'}")
    return 0


def _table_status(computed, quoted) -> str:
    comp = tuple(round(v, 9) for v in computed)
    quot = tuple(float(v) for v in quoted)
    if comp == quot:
        return "matches"
    # The quoted convention sometimes lists the nonzero entries first;
    # compare against that reordering of the computed pattern.
    head, rest = comp[0], comp[1:]
    reordered = (head,) + tuple(sorted(rest, reverse=True))
    if reordered == quot:
        return "matches up to entry order"
    return "DISAGREES"


def cmd_table(args) -> int:
    rows = []
    for row in catalog.TABLE_ROWS:
        state = parse_state(row.expression)
        _, display, record = _classification_record(state, args.eps)
        status = _table_status(display, row.quoted)
        rows.append(
            {
                "name": row.name,
                "expression": row.expression,
                "computed": list(display),
                "quoted": list(row.quoted),
                "status": status,
                "separable": record["separable"],
            }
        )
    if args.json:
        print(json.dumps(rows))
        return 0
    width = max(len(r["name"]) for r in rows)
    for r in rows:
        computed = _fmt_display(r["computed"])
        quoted = _fmt_display([float(v) for v in r["quoted"]])
        print(f"{r['name']:<{width}}  computed {computed:<24} quoted {quoted:<24} {r['status']}")
    return 0


def cmd_measure(args) -> int:
    state = _load_tripartite(args)
    result = collapse(state, Axis.from_qubit(args.qubit), args.outcome, args.eps)
    record = {
        "prob": float(result.prob),
        "post_state": state_to_json(result.post_state),
        "concurrence": result.concurrence(),
    }
    if state.backend == "exact":
        record["prob_exact"] = _enc(result.prob)
        record["concurrence2_exact"] = _enc(result.concurrence2)
        record["post_ket"] = state_to_ket(result.post_state)
    if args.json:
        print(json.dumps(record))
        return 0
    print(f"prob        : {float(result.prob):g}" + (
        f"  (exact {result.prob})" if state.backend == "exact" else ""))
    if state.backend == "exact":
        print(f"post state  : {state_to_ket(result.post_state)}")
    else:
        print(f"post state  : {result.post_state.amps}")
    print(f"concurrence : {result.concurrence():g}")
    return 0


def cmd_transform(args) -> int:
    state = _load_tripartite(args)
    backend = state.backend
    units = []
    for text in (args.u1, args.u2, args.u3):
        if text is None:
            units.append(Unitary2.identity(backend))
        else:
            u = _unitary_from_json(text)
            if backend == "approx":
                u = u.to_approx()
            units.append(u)
    out = apply_local_3(state, *units)
    record = {"state": state_to_json(out)}
    if out.backend == "exact":
        record["ket"] = state_to_ket(out)
    if args.json:
        print(json.dumps(record))
        return 0
    if out.backend == "exact":
        print(state_to_ket(out))
    else:
        print(out.amps)
    return 0


def _factors_record(fact):
    return {
        "fx": [_enc_scalar(v) for v in fact.fx],
        "fy": [_enc_scalar(v) for v in fact.fy],
        "fz": [_enc_scalar(v) for v in fact.fz],
    }


def cmd_check_sep(args) -> int:
    state = _load_tripartite(args)
    separable = is_separable(state, args.eps)
    record = {
        "separable": separable,
        "factors": _factors_record(extract_factors(state, args.eps)) if separable else None,
        "oracle_agrees": rank1_oracle(state, args.eps) == separable,
    }
    if args.json:
        print(json.dumps(record))
        return 0
    print(f"separable     : {'yes' if separable else 'no'}")
    if separable:
        fact = extract_factors(state, args.eps)
        print(f"factors       : x={tuple(map(str, fact.fx))} y={tuple(map(str, fact.fy))} z={tuple(map(str, fact.fz))}")
    print(f"oracle agrees : {'yes' if record['oracle_agrees'] else 'no'}")
    return 0


def cmd_factor(args) -> int:
    state = _load_tripartite(args)
    fact = extract_factors(state, args.eps)
    if args.json:
        print(json.dumps({"factors": _factors_record(fact)}))
        return 0
    print(f"x : ({fact.fx[0]}, {fact.fx[1]})")
    print(f"y : ({fact.fy[0]}, {fact.fy[1]})")
    print(f"z : ({fact.fz[0]}, {fact.fz[1]})")
    return 0


def cmd_random(args) -> int:
    rng = _random.Random(args.seed)
    records = []
    mismatches = 0
    for _ in range(args.count):
        state = random_tripartite(rng, args.kind)
        separable = is_separable(state, args.eps)
        agrees = rank1_oracle(state, args.eps) == separable
        mismatches += 0 if agrees else 1
        records.append(
            {
                "state": state_to_json(state),
                "separable": separable,
                "oracle_agrees": agrees,
            }
        )
    summary = {
        "count": args.count,
        "seed": args.seed,
        "kind": args.kind,
        "mismatches": mismatches,
        "states": records,
    }
    if args.json:
        print(json.dumps(summary))
    else:
        n_sep = sum(1 for r in records if r["separable"])
        print(
            f"{args.count} states (kind={args.kind}, seed={args.seed}): "
            f"{n_sep} separable, {mismatches} oracle mismatches"
        )
    return 1 if mismatches else 0


def _add_state_flags(sub, with_eps=True):
    sub.add_argument("expr", nargs="?", default=None, help="ket expression")
    sub.add_argument("--json-state", metavar="FILE", help="read the state from a JSON file")
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    mode = sub.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="exact rational arithmetic (default)")
    mode.add_argument("--float", action="store_true", help="convert the state to doubles")
    if with_eps:
        sub.add_argument("--eps", type=float, default=DEFAULT_EPS,
                         help="zero threshold for squared double-backend quantities")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tritangle",
        description="Classify tripartite qubit states: hyperdeterminant, "
        "sub-concurrences, separability, measurement collapse.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("classify", help="seven-element classification of a state")
    _add_state_flags(sub)
    sub.set_defaults(func=cmd_classify)

    sub = subs.add_parser("table", help="classify the canonical catalog states")
    sub.add_argument("--json", action="store_true")
    sub.add_argument("--eps", type=float, default=DEFAULT_EPS)
    sub.set_defaults(func=cmd_table)

    sub = subs.add_parser("measure", help="projective single-qubit measurement")
    _add_state_flags(sub)
    sub.add_argument("--qubit", type=int, choices=(1, 2, 3), required=True)
    sub.add_argument("--outcome", type=int, choices=(0, 1), required=True)
    sub.set_defaults(func=cmd_measure)

    sub = subs.add_parser("transform", help="apply local unitaries u1 (x) u2 (x) u3")
    _add_state_flags(sub, with_eps=False)
    for name in ("--u1", "--u2", "--u3"):
        sub.add_argument(name, metavar="JSON",
                         help='e.g. \'{"matrix": [["1","1"],["-1","1"]], "sqrt_scale2": 2}\'')
    sub.set_defaults(func=cmd_transform)

    sub = subs.add_parser("check-sep", help="decide full separability")
    _add_state_flags(sub)
    sub.set_defaults(func=cmd_check_sep)

    sub = subs.add_parser("factor", help="extract one-qubit factors of a separable state")
    _add_state_flags(sub)
    sub.set_defaults(func=cmd_factor)

    sub = subs.add_parser("random", help="generate random states and cross-check separability")
    sub.add_argument("--count", type=int, default=100)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--kind", choices=KINDS, default="mixed")
    sub.add_argument("--eps", type=float, default=DEFAULT_EPS)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(func=cmd_random)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (KetSyntaxError, EmptyState, UnsupportedIrrational, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    except BackendMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BACKEND_ERROR
    except (_ArityError, ImpossibleOutcome, NotSeparable, ZeroScale, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
