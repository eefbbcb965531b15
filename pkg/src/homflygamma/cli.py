"""Command-line front end.

Braid subcommands take a braid in text form ("1 -2 1 -2"); pass "-" or
omit it to read one braid per line from stdin. Exit codes: 0 ok, 1 domain
error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .braid import BraidWord, closure_info, parse, random_braid
from .checks import run_all, theorem1_sweep
from .conway import alexander_polynomial, conway_polynomial
from .errors import HomflyError
from .hecke import gamma
from .poly import _SparsePoly, substitute_mu
from .spanlab import predicted_dimension, rank_experiment
from .vassiliev import bennequin, corrected_series, theorem1_check

BRAID_COMMANDS = ("gamma", "homfly", "alexander", "triviality", "bennequin")


def poly_json(p: _SparsePoly) -> dict:
    return {"variables": list(p.variables), "terms": p.to_json_terms()}


def _header(text: str, w: BraidWord) -> dict:
    return {
        "input": text,
        "strands": w.strands,
        "exponent_sum": w.exponent_sum,
        "components": closure_info(w).components,
    }


def _default_degree(w: BraidWord, max_degree: int | None) -> int:
    return max(w.strands, w.length) if max_degree is None else max_degree


def evaluate(command: str, text: str, strands: int | None, max_degree: int | None) -> tuple[dict, list[str]]:
    """Run one braid subcommand; returns the JSON object and the text lines."""
    w = parse(text, strands)
    out = _header(text, w)
    if command == "gamma":
        g = gamma(w)
        out["result"] = poly_json(g.value)
        return out, [f"Gamma = {g.value}"]
    if command == "homfly":
        g = gamma(w)
        p = substitute_mu(g.value, w.exponent_sum, w.strands)
        out["result"] = poly_json(p)
        return out, [f"P = {p}"]
    if command == "alexander":
        nabla = conway_polynomial(w)
        delta = alexander_polynomial(w)
        out["result"] = poly_json(nabla)
        out["alexander"] = poly_json(delta)
        return out, [f"Conway = {nabla}", f"Alexander = {delta}"]
    if command == "triviality":
        K = _default_degree(w, max_degree)
        rep = theorem1_check(w, K)
        fs = corrected_series(gamma(w), rep.max_checked)
        out["result"] = poly_json(fs.as_poly())
        d = rep.to_dict()
        d.pop("braid")
        d.pop("series")
        out.update(d)
        lines = [f"f_{j} = {f}" for j, f in enumerate(rep.series)]
        lines += [
            f"first_nonvanishing = {rep.first_nonvanishing}",
            f"homfly_k_trivial_up_to = {rep.homfly_k_trivial_up_to}",
            f"exponent_sum = {rep.exponent_sum}",
            f"allowed_exponents = {rep.allowed_exponents}",
            f"constraint_satisfied = {rep.constraint_satisfied}",
            f"bennequin = {rep.bennequin}",
            f"theorem_consistent = {rep.theorem_consistent}",
        ]
        return out, lines
    if command == "bennequin":
        out["bennequin"] = bennequin(w)
        return out, [str(out["bennequin"])]
    raise ValueError(command)


def _run_braid_command(args) -> int:
    if args.braid is None or args.braid == "-":
        inputs = [line.strip() for line in sys.stdin if line.strip()]
        batch = True
    else:
        inputs = [args.braid]
        batch = False

    def job(text):
        try:
            return evaluate(args.command, text, args.strands, args.max_degree), None
        except HomflyError as exc:
            return None, f"{type(exc).__name__}: {exc}"

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(job, inputs))

    status = 0
    for text, (res, err) in zip(inputs, results):
        if err is not None:
            status = 1
            if args.format == "json" and batch:
                print(json.dumps({"input": text, "error": err}))
            else:
                print(f"error: {err}", file=sys.stderr)
            continue
        obj, lines = res
        if args.format == "json":
            print(json.dumps(obj))
        else:
            if batch:
                print(f"# {text}")
            print("\n".join(lines))
    return status


def _run_dims(args) -> int:
    ns = [args.strands] if args.strands else [2, 3, 4, 5]
    K = 7 if args.max_degree is None else args.max_degree
    ok = True
    rows = []
    for n in ns:
        for k in range(K + 1):
            rep = rank_experiment(n, k, args.samples, args.seed)
            ok &= rep.matches
            rows.append(rep)
    if args.format == "json":
        for rep in rows:
            print(json.dumps({**rep.__dict__, "matches": rep.matches}))
    else:
        print(f"{'n':>3} {'k':>3} {'predicted':>9} {'observed':>8} {'witnesses':>9} {'samples':>7}")
        for rep in rows:
            print(f"{rep.n:>3} {rep.k:>3} {rep.predicted:>9} {rep.observed_rank:>8} "
                  f"{rep.witness_count:>9} {rep.sample_count:>7}")
    return 0 if ok else 1


def _run_sweep(args) -> int:
    if args.samples:
        n = args.strands or 3
        L = args.max_length or 7
        import random

        rng = random.Random(args.seed)
        stats = {"words": 0, "knots": 0, "trivial": 0, "counterexamples": []}
        for _ in range(args.samples):
            w = random_braid(n, rng.randint(0, L), rng)
            stats["words"] += 1
            if not closure_info(w).is_knot:
                continue
            stats["knots"] += 1
            rep = theorem1_check(w)
            stats["trivial"] += rep.hypothesis_holds
            if not rep.theorem_consistent:
                stats["counterexamples"].append(str(w))
    elif args.strands:
        stats = theorem1_sweep(((args.strands, args.max_length or 7),))
    else:
        stats = theorem1_sweep()
    if args.format == "json":
        print(json.dumps(stats))
    else:
        print(f"words: {stats['words']}")
        print(f"knots: {stats['knots']}")
        print(f"homfly-n-trivial knots: {stats['trivial']}")
        print(f"counterexamples: {len(stats['counterexamples'])}")
        for c in stats["counterexamples"]:
            print(f"  {c}")
    return 0 if not stats["counterexamples"] else 1


def _run_selfcheck(args) -> int:
    results = run_all()
    if args.format == "json":
        print(json.dumps([r.__dict__ for r in results]))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homflygamma", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)

    for name in BRAID_COMMANDS:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("braid", nargs="?", help='signed generator indices, e.g. "1 -2 1 -2"; "-" reads stdin')
        p.add_argument("--strands", type=int)
        p.add_argument("--max-degree", type=int)
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("dims", parents=[common])
    p.add_argument("--strands", type=int)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--samples", type=int, default=60)

    p = sub.add_parser("sweep", parents=[common])
    p.add_argument("--strands", type=int)
    p.add_argument("--max-length", type=int)
    p.add_argument("--samples", type=int, default=0, help="random words instead of exhaustive enumeration")

    sub.add_parser("selfcheck", parents=[common])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command in BRAID_COMMANDS:
            return _run_braid_command(args)
        if args.command == "dims":
            return _run_dims(args)
        if args.command == "sweep":
            return _run_sweep(args)
        return _run_selfcheck(args)
    except HomflyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
