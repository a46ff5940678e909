"""Command-line interface.

Output is one JSON object per line unless ``--format tsv`` (or ``dot`` for
graphs) is chosen. Exit status is 0 on success, 1 when a verification fails
or a membership query is negative, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import audits
from .classes import count_class
from .kn_crystal import kn_graph
from .partitions import format_partition, half, modulus, parse_partition
from .registry import CLASS_NAMES, make_class
from .schur_construction import derive_forbidden_set, pattern_templates
from .series_count import product_character, rr_product_side, rr_sum_side
from .sp_crystal import sp_graph

THREADS_ENV = "SCHUR_CRYSTAL_THREADS"


class UsageError(Exception):
    pass


def _emit(args, record: dict, tsv: Sequence | None = None) -> None:
    if args.format == "tsv" and tsv is not None:
        print("\t".join(str(x) for x in tsv))
    else:
        print(json.dumps(record, sort_keys=False))


def _parse_params(text: str | None) -> dict:
    out: dict = {}
    if not text:
        return out
    for item in text.split(","):
        if not item.strip():
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"parameter {item!r} is not of the form key=value")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise UsageError(f"parameter {key!r} must be an integer") from None
    return out


def _threads(args) -> int:
    if args.threads is not None:
        value = args.threads
    else:
        raw = os.environ.get(THREADS_ENV, "1")
        try:
            value = int(raw)
        except ValueError:
            raise UsageError(f"{THREADS_ENV}={raw!r} is not an integer") from None
    if value < 1:
        raise UsageError("thread count must be positive")
    return value


def _class_from(name: str, p: int | None, params: str | None):
    kw = _parse_params(params)
    if p is not None:
        kw["p"] = p
    try:
        return make_class(name, **kw), kw
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def _count_worker(task):
    name, kw, max_n, first = task
    return count_class(make_class(name, **kw), max_n, first)


def counts_for(name: str, kw: dict, max_n: int, threads: int) -> list[int]:
    """Counts by size, with the work split on the largest part when threads > 1.
    The split is fixed, so the result does not depend on scheduling."""
    cls = make_class(name, **kw)
    if cls.counter is not None:
        return cls.counter(max_n)
    if threads <= 1 or max_n < 2:
        return count_class(cls, max_n)
    tasks = [(name, kw, max_n, first) for first in range(max_n, 0, -1)]
    total = [0] * (max_n + 1)
    total[0] = 1
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_count_worker, tasks):
            for n, c in enumerate(part):
                total[n] += c
    return total


# ---------------------------------------------------------------------------
# subcommands


def cmd_count(args) -> int:
    cls, kw = _class_from(args.cls, args.p, args.params)
    counts = counts_for(args.cls, kw, args.max_n, _threads(args))
    for n, c in enumerate(counts):
        _emit(args, {"class": args.cls, "params": kw, "n": n, "count": c}, (n, c))
    if args.figure:
        from .report import plot_counts
        plot_counts(args.figure, {args.cls: counts}, title=f"{args.cls} {kw}")
    return 0


def cmd_list(args) -> int:
    from .classes import iter_class

    cls, kw = _class_from(args.cls, args.p, args.params)
    for lam in iter_class(cls, args.n):
        _emit(args, {"partition": list(lam)}, (format_partition(lam),))
    return 0


def cmd_member(args) -> int:
    cls, kw = _class_from(args.cls, args.p, args.params)
    try:
        lam = parse_partition(args.partition)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = cls.contains(tuple(lam))
    _emit(args, {"partition": format_partition(lam), "class": args.cls, "params": kw, "member": ok},
          (format_partition(lam), int(ok)))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    kind = args.kind
    threads = _threads(args)
    if kind == "equinumerosity":
        a, kw_a = _class_from(args.a, args.p, args.params_a)
        b, kw_b = _class_from(args.b, args.p, args.params_b)
        if args.sets:
            from .series_count import verify_pt_equivalence
            report = verify_pt_equivalence(a, b, args.max_n, as_sets=True)
            for n, x, y in report["counts"]:
                _emit(args, {"n": n, "a": x, "b": y}, (n, x, y))
        else:
            ca = counts_for(args.a, kw_a, args.max_n, threads)
            cb = counts_for(args.b, kw_b, args.max_n, threads)
            first = next((n for n in range(args.max_n + 1) if ca[n] != cb[n]), None)
            for n in range(args.max_n + 1):
                _emit(args, {"n": n, "a": ca[n], "b": cb[n]}, (n, ca[n], cb[n]))
            report = {
                "class_a": args.a, "class_b": args.b,
                "params": {"a": kw_a, "b": kw_b, "max_n": args.max_n, "sets": False},
                "counts": [[n, ca[n], cb[n]] for n in range(args.max_n + 1)],
                "verdict": "pass" if first is None else "fail",
                "first_mismatch": first,
            }
        if args.figure:
            from .report import plot_counts
            plot_counts(args.figure,
                        {args.a: [c[1] for c in report["counts"]], args.b: [c[2] for c in report["counts"]]},
                        title=f"{args.a} vs {args.b}", mismatch=report["first_mismatch"])
    else:
        if args.p is None:
            raise UsageError(f"verify {kind} needs --p")
        try:
            modulus(args.p)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if kind == "crystal":
            report = audits.verify_crystal(args.p, args.max_n)
            if args.figure:
                from .report import plot_layers
                plot_layers(args.figure, report["layers"], report["expected"], title=f"layers, p={args.p}")
        elif kind == "zigzag":
            report = audits.verify_zigzag(args.p, args.j, args.max_content)
        elif kind == "psi":
            report = audits.verify_psi(args.p, args.j, args.s)
        elif kind == "window":
            report = audits.verify_window_truncation(args.p, args.max_n)
        else:
            report = audits.verify_roundtrip(args.p, args.j, args.max_content)
    _emit(args, report, (report.get("check", kind), report["verdict"]))
    return 0 if report["verdict"] == "pass" else 1


def cmd_graph(args) -> int:
    if args.p is None:
        raise UsageError("graph needs --p")
    try:
        h = half(args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.structure == "sp":
        g = sp_graph(args.p, args.depth)
        label = lambda v: format_partition(v) or "()"
    else:
        s = args.s if args.s is not None else h
        g = kn_graph(h, s, args.depth)
        label = lambda v: "[" + ",".join(map(str, v)) + "]"
    if args.format == "dot":
        sys.stdout.write(g.to_dot(label))
        return 0
    for n, layer in enumerate(g.layers):
        for v in layer:
            _emit(args, {"layer": n, "vertex": label(v)}, ("vertex", n, label(v)))
    for a, i, b in g.edges:
        _emit(args, {"source": label(a), "index": i, "target": label(b)}, ("edge", label(a), i, label(b)))
    return 0


def cmd_patterns(args) -> int:
    try:
        modulus(args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fs = derive_forbidden_set(args.p)
    if args.constructed:
        for mu in fs.constructed:
            _emit(args, {"set": "constructed", "pattern": list(mu)}, ("constructed", format_partition(mu)))
    chosen = fs.minimal if args.all else fs.exceptional
    label = "minimal" if args.all else "exceptional"
    if args.expand:
        for mu in chosen:
            _emit(args, {"set": label, "pattern": list(mu)}, (label, format_partition(mu)))
    else:
        for t in pattern_templates(chosen):
            _emit(args, {"set": label, "template": t}, (label, t))
    _emit(args, {
        "p": args.p, "constructed": len(fs.constructed), "minimal": len(fs.minimal),
        "gap": len(fs.gap), "exceptional": len(fs.exceptional), "complete": fs.complete,
    }, ("summary", len(fs.constructed), len(fs.minimal), len(fs.gap), len(fs.exceptional)))
    return 0


def cmd_series(args) -> int:
    if args.kind == "product":
        if args.p is None:
            raise UsageError("the product series needs --p")
        try:
            coeffs = list(product_character(args.p, args.terms))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.kind in ("rr0", "rr1"):
        sigma = int(args.kind[-1])
        coeffs = list(rr_sum_side(sigma, args.terms))
        if coeffs != list(rr_product_side(sigma, args.terms)):
            raise AssertionError("sum and product sides disagree")
    else:
        _, kw = _class_from(args.kind, args.p, args.params)
        coeffs = counts_for(args.kind, kw, args.terms, _threads(args))
    for n, c in enumerate(coeffs):
        _emit(args, {"n": n, "coefficient": c}, (n, c))
    if args.figure:
        from .report import plot_counts
        plot_counts(args.figure, {args.kind: coeffs}, title=f"{args.kind} series")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def global_flags(parser, defaults):
        kw = {} if defaults else {"default": argparse.SUPPRESS}
        parser.add_argument("--format", choices=["json", "tsv", "dot"], **(kw or {"default": "json"}))
        parser.add_argument("--threads", type=int, **(kw or {"default": None}),
                            help=f"worker processes (default ${THREADS_ENV} or 1)")

    # flags may sit before or after the subcommand; only the top level sets defaults
    common = argparse.ArgumentParser(add_help=False)
    global_flags(common, defaults=False)

    parser = argparse.ArgumentParser(prog="schur-crystal",
                                     description="Partition classes, S_p crystals and identity checks.")
    global_flags(parser, defaults=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def class_args(sp, flag="--class", dest="cls"):
        sp.add_argument(flag, dest=dest, required=True, choices=CLASS_NAMES)
        sp.add_argument("--p", type=int)
        sp.add_argument("--params", help="extra integer parameters, e.g. a=1,b=5 or l=2,k=3,a=2")

    sp = sub.add_parser("count", parents=[common], help="count members by size")
    class_args(sp)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--figure", help="also write a plot of the counts to this file")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("list", parents=[common], help="list members of one size")
    class_args(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_list)

    sp = sub.add_parser("member", parents=[common], help="test membership (exit 0 yes, 1 no)")
    class_args(sp)
    sp.add_argument("--partition", required=True, help='comma separated parts, "" for the empty partition')
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("verify", parents=[common], help="run a bounded verification")
    sp.add_argument("kind", choices=["equinumerosity", "crystal", "zigzag", "psi", "window", "roundtrip"])
    sp.add_argument("--a", choices=CLASS_NAMES)
    sp.add_argument("--b", choices=CLASS_NAMES)
    sp.add_argument("--params-a")
    sp.add_argument("--params-b")
    sp.add_argument("--sets", action="store_true", help="compare members, not just counts")
    sp.add_argument("--p", type=int)
    sp.add_argument("--j", type=int, default=1)
    sp.add_argument("--s", type=int)
    sp.add_argument("--max-n", type=int, default=20)
    sp.add_argument("--max-content", "--max-window", dest="max_content", type=int, default=50,
                    help="bound on the total size of the blocks visited")
    sp.add_argument("--figure", help="also write a plot to this file")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("graph", parents=[common], help="crystal graph from the highest weight element")
    sp.add_argument("--structure", choices=["sp", "kn"], required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--s", type=int)
    sp.add_argument("--depth", type=int, default=4)
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("patterns", parents=[common], help="forbidden patterns of the image class")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--expand", action="store_true", help="one pattern per line instead of templates")
    sp.add_argument("--all", action="store_true", help="include patterns expressible by the gap rule")
    sp.add_argument("--constructed", action="store_true", help="also list every bad window configuration")
    sp.set_defaults(func=cmd_patterns)

    sp = sub.add_parser("series", parents=[common], help="coefficients of a generating series")
    sp.add_argument("--kind", "--class", dest="kind", default="product",
                    help="product, rr0, rr1, or a class name counted by enumeration")
    sp.add_argument("--product", dest="kind", action="store_const", const="product",
                    help="the infinite product with no part divisible by p (default)")
    sp.add_argument("--p", type=int)
    sp.add_argument("--params")
    sp.add_argument("--terms", type=int, required=True)
    sp.add_argument("--figure", help="also write a plot to this file")
    sp.set_defaults(func=cmd_series)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.kind == "equinumerosity" and not (args.a and args.b):
        parser.error("verify equinumerosity needs --a and --b")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
