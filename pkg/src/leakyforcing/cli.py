"""Command-line interface: ``leaky compute|forts|table|verify|audit|gap-probe``.

Exit codes: 0 success, 1 a verification or audit check failed, 2 unparseable
or out-of-domain input, 3 requested method not applicable, 4 time budget
exhausted, 5 two methods disagreed (a bug).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import closed_forms, extremal, perturbation, petersen
from .errors import DomainError, GraphParseError, NotCoveredError, NotFoundError, ResourceError
from .families import generate, parse_family, random_connected_graph, random_tree, random_unicyclic
from .forts import DEFAULT_FORT_CAP, enumerate_minimal_forts
from .graph import Graph, parse_graph
from .solver import leaky_forcing_number

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INAPPLICABLE, EXIT_TIMEOUT, EXIT_DISAGREE = range(6)

THEOREM_IDS = (
    "tree", "uni-z1", "uni-z2", "uni-zl", "gp-one-leaky", "gp-two-leaky",
    "edge-bound", "vertex-bound", "extremal-min", "extremal-max",
)


class CliExit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    return int(os.environ.get("LEAKY_THREADS", "1"))


# ----------------------------------------------------------------------
# graph input


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="named family, e.g. petersen:5,2 or path:6")
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--file", help="graph file, '-' for stdin")
    p.add_argument("--format", choices=("edge_list", "graph6"), default="edge_list",
                   help="format of --file (default edge_list)")


def _load_graph(args):
    """Returns ``(graph, family_spec_or_None)``."""
    try:
        if args.family:
            spec = parse_family(args.family)
            return generate(spec), spec
        if args.graph6 is not None:
            return parse_graph(args.graph6, "graph6"), None
        if args.file == "-":
            text = sys.stdin.read()
        else:
            with open(args.file, encoding="ascii") as fh:
                text = fh.read()
        return parse_graph(text, args.format), None
    except (GraphParseError, DomainError, NotFoundError, UnicodeDecodeError) as exc:
        raise CliExit(EXIT_PARSE, f"input error: {exc}") from None
    except OSError as exc:
        raise CliExit(EXIT_PARSE, f"cannot read {args.file}: {exc.strerror}") from None


# ----------------------------------------------------------------------
# compute / forts


def _formula(g: Graph, spec, leaks: int):
    if spec is not None:
        return closed_forms.family_value(spec, leaks)
    return closed_forms.structural_value(g, leaks)


def cmd_compute(args) -> int:
    g, spec = _load_graph(args)
    leaks = args.leaks
    out: dict = {"n": g.n, "m": g.edge_count, "leaks": leaks, "method": args.method}
    if args.method == "exact":
        res = leaky_forcing_number(g, leaks, timeout=args.timeout)
        out.update(value=res.value, witness=sorted(res.witness), agreement=None)
    elif args.method == "forts":
        try:
            res = leaky_forcing_number(g, leaks, "fort_hitting", fort_cap=args.fort_cap)
        except ResourceError as exc:
            raise CliExit(EXIT_INAPPLICABLE, f"fort method not applicable: {exc}") from None
        out.update(value=res.value, witness=sorted(res.witness), agreement=None)
    elif args.method == "formula":
        try:
            rep = _formula(g, spec, leaks)
        except NotCoveredError as exc:
            raise CliExit(EXIT_INAPPLICABLE, f"formula not applicable: {exc}") from None
        out.update(value=rep.value, agreement=None, theorem=rep.theorem, case_label=rep.case_label,
                   witness=None if rep.witness is None else sorted(rep.witness))
    else:
        values: dict[str, int] = {}
        exact = leaky_forcing_number(g, leaks, timeout=args.timeout)
        values["exact"] = exact.value
        if g.n <= args.fort_cap:
            values["forts"] = leaky_forcing_number(g, leaks, "fort_hitting", fort_cap=args.fort_cap).value
        try:
            rep = _formula(g, spec, leaks)
            values["formula"] = rep.value
            out.update(theorem=rep.theorem, case_label=rep.case_label)
        except NotCoveredError:
            pass
        agree = len(set(values.values())) == 1
        out.update(value=exact.value, witness=sorted(exact.witness), methods=values, agreement=agree)
        if not agree:
            _emit(out)
            raise CliExit(EXIT_DISAGREE, f"METHOD DISAGREEMENT: {values}")
    if args.dot and out.get("witness") is not None:
        with open(args.dot, "w", encoding="ascii") as fh:
            fh.write(petersen.to_dot(g, out["witness"]))
    _emit(out)
    return EXIT_OK


def cmd_forts(args) -> int:
    g, _ = _load_graph(args)
    try:
        forts = enumerate_minimal_forts(g, args.leaks, args.fort_cap)
    except ResourceError as exc:
        raise CliExit(EXIT_INAPPLICABLE, str(exc)) from None
    _emit({"n": g.n, "leaks": args.leaks, "count": len(forts),
           "forts": [{"members": f.as_list(), "exceptions": f.exception_count} for f in forts]})
    return EXIT_OK


# ----------------------------------------------------------------------
# table / gap probe


def cmd_table(args) -> int:
    cells = petersen.small_case_table(slow=args.slow, timeout=args.timeout)
    sys.stdout.write(petersen.table_json(cells) + "\n" if args.json else petersen.table_csv(cells))
    bad = [c for c in cells if not c.brackets_printed() or (c.computed is not None and c.diff != 0)]
    for c in bad:
        print(f"cell P({c.n},{c.k}) leaks={c.leaks}: printed {c.printed}, computed {c.computed}"
              f" (status {c.status}, bounds {c.lower}..{c.upper})", file=sys.stderr)
    if any(c.status == "timeout" and not c.brackets_printed() for c in cells):
        return EXIT_TIMEOUT
    return EXIT_FAIL if bad else EXIT_OK


def cmd_gap_probe(args) -> int:
    ns = range(args.n_from, args.n_to + 1) if args.n_from is not None else None
    _emit(petersen.gap_probe(args.k, ns))
    return EXIT_OK


# ----------------------------------------------------------------------
# verify


def _need(args, *names) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise CliExit(EXIT_PARSE, f"theorem {args.theorem} needs {' '.join(missing)}")


def _verify_random_formula(args, rng, make, formula, leak_values) -> tuple[int, list]:
    failures = []
    checked = 0
    for i in range(args.count):
        g = make(rng)
        for leaks in leak_values:
            rep = formula(g, leaks)
            exact = leaky_forcing_number(g, leaks).value
            checked += 1
            if rep.value != exact:
                failures.append({"sample": i, "leaks": leaks, "edges": g.edges(),
                                 "formula": rep.value, "case": rep.case_label, "exact": exact})
    return checked, failures


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    t = args.theorem
    n_max = args.n_max or 12
    detail: dict = {}

    def rand_unicyclic(r):
        n = r.randint(3, n_max)
        return random_unicyclic(n, r.randint(3, min(n, 6)), r)

    if t == "tree":
        checked, failures = _verify_random_formula(
            args, rng, lambda r: random_tree(r.randint(2, n_max), r), closed_forms.tree_value,
            [args.leaks] if args.leaks is not None else [1, 2, 3])
    elif t in ("uni-z1", "uni-z2", "uni-zl"):
        leak_values = {"uni-z1": [1], "uni-z2": [2],
                       "uni-zl": [args.leaks] if args.leaks is not None else [3, 4]}[t]
        checked, failures = _verify_random_formula(
            args, rng, rand_unicyclic, closed_forms.unicyclic_value, leak_values)
    elif t in ("gp-one-leaky", "gp-two-leaky"):
        _need(args, "n", "k")
        kind, leaks = ("one_leaky", 1) if t == "gp-one-leaky" else ("two_leaky", 2)
        try:
            rep = petersen.verify_construction(args.n, args.k, leaks, kind, with_forcers=False)
        except DomainError as exc:
            raise CliExit(EXIT_PARSE, str(exc)) from None
        checked = 1
        failures = [] if rep.ok else [rep.to_json()]
        detail = {"size": len(rep.members), "n": args.n, "k": args.k, "leaks": leaks}
    elif t in ("edge-bound", "vertex-bound"):
        failures = []
        checked = 0
        for i in range(args.count):
            g = random_connected_graph(rng.randint(2, min(n_max, 9)), rng)
            leaks = rng.randint(0, 2)
            if t == "edge-bound":
                rep = perturbation.edge_delta(g, rng.choice(g.edges()), leaks)
            else:
                rep = perturbation.vertex_delta(g, rng.randrange(g.n), leaks)
            checked += 1
            if not rep.bound_ok:
                failures.append({"sample": i, "edges": g.edges(), **rep.to_json()})
    elif t in ("extremal-min", "extremal-max"):
        failures = []
        checked = 0
        for i in range(args.count):
            g = random_connected_graph(rng.randint(3, min(n_max, 8)), rng)
            z1, failed = extremal.audit_graph(g)
            checked += 1
            want = "min_is_2" if t == "extremal-min" else "max_is_n_minus_1"
            if want in failed:
                failures.append({"sample": i, "edges": g.edges(), "z1": z1})
    else:  # pragma: no cover - argparse restricts choices
        raise CliExit(EXIT_PARSE, f"unknown theorem {t}")
    _emit({"theorem": t, "seed": args.seed, "checked": checked, "failures": failures,
           "result": "PASS" if not failures else "FAIL", **detail})
    return EXIT_OK if not failures else EXIT_FAIL


# ----------------------------------------------------------------------
# audit


def cmd_audit(args) -> int:
    try:
        rep = extremal.exhaustive_audit(args.n_max, budget=args.timeout)
    except DomainError as exc:
        raise CliExit(EXIT_PARSE, str(exc)) from None
    _emit(rep.to_json())
    if args.timing:
        print(f"runtime {rep.runtime:.2f}s", file=sys.stderr)
    if not rep.complete:
        return EXIT_TIMEOUT
    return EXIT_OK if rep.ok else EXIT_FAIL


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leaky", description="Leaky zero forcing toolkit.")
    p.add_argument("--threads", type=int, default=None,
                   help="worker budget (default $LEAKY_THREADS or 1); results do not depend on it")
    p.add_argument("--timing", action="store_true", help="print wall-clock time to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="leaky forcing number of one graph")
    _add_graph_input(c)
    c.add_argument("--leaks", type=int, required=True)
    c.add_argument("--method", choices=("exact", "forts", "formula", "all"), default="exact")
    c.add_argument("--timeout", type=float, default=None, help="seconds for the exact solver")
    c.add_argument("--fort-cap", type=int, default=DEFAULT_FORT_CAP)
    c.add_argument("--dot", help="write a DOT file with the witness highlighted")
    c.set_defaults(func=cmd_compute)

    f = sub.add_parser("forts", help="minimal leaky forts")
    _add_graph_input(f)
    f.add_argument("--leaks", type=int, required=True)
    f.add_argument("--fort-cap", type=int, default=DEFAULT_FORT_CAP)
    f.set_defaults(func=cmd_forts)

    t = sub.add_parser("table", help="recompute the small generalized Petersen table")
    t.add_argument("--json", action="store_true")
    t.add_argument("--slow", action="store_true", help="include P(10,3) and P(11,3)")
    t.add_argument("--timeout", type=float, default=None, help="seconds per cell")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="check one theorem")
    v.add_argument("--theorem", choices=THEOREM_IDS, required=True)
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--leaks", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=50)
    v.add_argument("--n-max", type=int)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("audit", help="exhaustive extremal audit over labeled connected graphs")
    a.add_argument("--n-max", type=int, default=5)
    a.add_argument("--timeout", type=float, default=None, help="overall budget in seconds")
    a.set_defaults(func=cmd_audit)

    g = sub.add_parser("gap-probe", help="two-leak check of the block set below the theorem range")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--n-from", type=int)
    g.add_argument("--n-to", type=int)
    g.set_defaults(func=cmd_gap_probe)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if _threads(args) < 1:
        print("error: thread count must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    t0 = time.monotonic()
    try:
        code = args.func(args)
    except CliExit as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = exc.code
    except ResourceError as exc:
        print(f"error: {exc} (lower bound {exc.lower}, upper bound {exc.upper})", file=sys.stderr)
        code = EXIT_TIMEOUT
    except NotCoveredError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_INAPPLICABLE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_PARSE
    if args.timing and args.command != "audit":
        print(f"runtime {time.monotonic() - t0:.2f}s", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
