"""Command line interface.

Exit codes: 0 success (or valid monodromy / axioms passed), 1 invalid
monodromy or failed axioms, 2 usage or structural error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from .catalog import TORUS_DEHN, catalog, resolve
from .core import (FiniteQuandle, StructuralError, check_axioms, enumerate_homs, load_quandle,
                   subquandle_generated)
from .homology import CapacityError, homology
from .monodromy import (coloring_invariant, counting_invariant, hurwitz_orbit, load_tuple,
                        tuple_to_json, validate)
from .torus import check_slope_axioms

EXIT_OK, EXIT_INVALID, EXIT_ERROR = 0, 1, 2


def load_quandle_arg(spec: str) -> FiniteQuandle:
    """A catalog name, or a path to a quandle JSON file."""
    if spec.endswith(".json") or Path(spec).is_file():
        return load_quandle(spec)
    return resolve(spec)


# -- subcommands: each returns (exit code, json payload, text) ------------------------


def cmd_axioms(args) -> tuple[int, dict, str]:
    if args.quandle == TORUS_DEHN:
        rep = check_slope_axioms(args.bound, sample=args.samples, seed=args.seed)
        size = None
    else:
        Q = load_quandle_arg(args.quandle)
        rep = check_axioms(Q)
        size = Q.n
    out = rep.to_json()
    out["violations"] = [[name, [str(w) for w in wit]] for name, wit in rep.violations]
    out.update(quandle=args.quandle, size=size)
    text = f"{args.quandle}: {'passed' if rep.passed else 'FAILED'}"
    for name, wit in rep.violations[:10]:
        text += f"\n  {name} at {tuple(str(w) for w in wit)}"
    return (EXIT_OK if rep.passed else EXIT_INVALID), out, text


def cmd_homs(args) -> tuple[int, dict, str]:
    src, tgt = load_quandle_arg(args.source), load_quandle_arg(args.target)
    homs = enumerate_homs(src, tgt)
    out = {"format": 1, "count": len(homs), "homs": [list(h.map) for h in homs]}
    lines = [f"{len(homs)} homomorphisms"]
    lines += [" ".join(map(str, h.map)) for h in homs[: args.show]]
    return EXIT_OK, out, "\n".join(lines)


def cmd_generate(args) -> tuple[int, dict, str]:
    Q = load_quandle_arg(args.quandle)
    seed = []
    for s in args.seed_elements:
        try:
            seed.append(Q.index(s))
        except (KeyError, ValueError):
            raise StructuralError(f"unknown element {s!r}") from None
    S = sorted(subquandle_generated(Q, seed))
    out = {"format": 1, "elements": S, "labels": [Q.label(x) for x in S]}
    return EXIT_OK, out, f"{len(S)} elements: " + " ".join(Q.label(x) for x in S)


def _load_tuple_arg(args):
    t = load_tuple(args.tuple)
    if getattr(args, "mode", None) and args.mode != t.mode:
        raise StructuralError(f"--mode {args.mode} does not match file mode {t.mode}")
    if getattr(args, "base", None):
        from dataclasses import replace
        t = replace(t, base=args.base)
    return t


def cmd_orbit(args) -> tuple[int, dict, str]:
    t = _load_tuple_arg(args)
    orb = hurwitz_orbit(t, max_size=args.max_orbit, rotations=args.rotations,
                        conjugation=args.conjugation)
    members = [tuple_to_json(m)["entries"] for m in orb.members]
    out = {"format": 1, "size": len(orb), "truncated": orb.truncated, "members": members}
    text = f"orbit size {len(orb)}" + (" (truncated)" if orb.truncated else "")
    return EXIT_OK, out, text


def cmd_validate(args) -> tuple[int, dict, str]:
    t = _load_tuple_arg(args)
    rep = validate(t, require_connected=args.connected, projective=args.projective)
    out = rep.to_json()
    lines = [f"{'valid' if rep.valid else 'INVALID'} ({t.mode}, base {t.base}, {len(t)} entries)"]
    lines += [f"  {c.name}: {'ok' if c.passed else 'FAIL'}" for c in rep.checks]
    return (EXIT_OK if rep.valid else EXIT_INVALID), out, "\n".join(lines)


def cmd_invariant(args) -> tuple[int, dict, str]:
    t = _load_tuple_arg(args)
    Y = load_quandle_arg(args.target)
    count = counting_invariant(t, Y)
    try:
        coloring = coloring_invariant(t, Y)
    except ValueError:
        coloring = None
    out = {"format": 1, "counting": count, "coloring": coloring}
    return EXIT_OK, out, f"counting {count}\ncoloring {coloring}"


def cmd_homology(args) -> tuple[int, dict, str]:
    Q = load_quandle_arg(args.quandle)
    H = homology(Q, args.degree, args.theory, max_degree=args.bound)
    out = {"format": 1, "degree": args.degree, "theory": args.theory, **H.to_json(),
           "text": str(H)}
    return EXIT_OK, out, f"H_{args.degree}^{args.theory} = {H}"


def cmd_catalog(args) -> tuple[int, dict, str]:
    rows = [{"name": name, "size": Q.n} for name, Q in catalog().items()]
    rows.append({"name": TORUS_DEHN, "size": None})
    text = "\n".join(f"{r['name']:36s} {r['size'] if r['size'] is not None else 'infinite'}"
                     for r in rows)
    return EXIT_OK, {"format": 1, "quandles": rows}, text


# -- parser ------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    p = argparse.ArgumentParser(prog="quandle-monodromy",
                                description="Quandles, monodromy tuples and quandle homology.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("axioms", cmd_axioms, "check the quandle axioms")
    sp.add_argument("quandle")
    sp.add_argument("--bound", type=int, default=5, help="slope height for torus-dehn")
    sp.add_argument("--samples", type=int, default=1000, help="random triples for torus-dehn")

    sp = add("homs", cmd_homs, "enumerate quandle homomorphisms")
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("--show", type=int, default=20, help="maps to print in text mode")

    sp = add("generate", cmd_generate, "subquandle generated by elements")
    sp.add_argument("quandle")
    sp.add_argument("seed_elements", nargs="+", metavar="element")

    for name, func, help in (("orbit", cmd_orbit, "Hurwitz orbit of a monodromy tuple"),
                             ("validate", cmd_validate, "validate a monodromy tuple"),
                             ("invariant", cmd_invariant, "counting invariants of a tuple")):
        sp = add(name, func, help)
        sp.add_argument("tuple")
        sp.add_argument("--mode", choices=("cover", "braid", "lefschetz"))
        sp.add_argument("--base", choices=("disk", "sphere"))
        if name == "orbit":
            sp.add_argument("--max-orbit", type=int, default=10_000)
            sp.add_argument("--rotations", action="store_true")
            sp.add_argument("--conjugation", action="store_true")
        if name == "validate":
            sp.add_argument("--connected", action="store_true")
            sp.add_argument("--projective", action="store_true")
        if name == "invariant":
            sp.add_argument("target")

    sp = add("homology", cmd_homology, "rack or quandle homology")
    sp.add_argument("quandle")
    sp.add_argument("--degree", type=int, default=1)
    sp.add_argument("--theory", choices=("rack", "quandle"), default="rack")
    sp.add_argument("--bound", type=int, default=4, help="maximum degree")

    add("catalog", cmd_catalog, "list built-in quandles")
    return p


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, payload, text = args.func(args)
    except (StructuralError, CapacityError, ValueError, OSError) as exc:
        if args.json:
            print(json.dumps({"format": 1, "error": str(exc)}), file=stdout)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.json:
        print(json.dumps(payload, sort_keys=True), file=stdout)
    else:
        print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
