"""Command-line surface.

Exit codes: 0 = answered (either verdict), 2 = input error, 3 = search or
enumeration budget exhausted.

Certificate terms use the grammar

    term := c(LABEL) | u(term,term) | j(LABEL,LABEL,term) | r(LABEL,LABEL,term)

with positive integer labels: c creates a labeled vertex, u is disjoint
union, j joins two label classes, r relabels one class into another.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .graph import Graph, is_isomorphic, max_degree
from . import generators as gen
from .containment import (
    ORACLE_MAX_VERTICES,
    contains_itm,
    contains_itm_oracle,
    verify_model,
)
from . import recognizers as rec
from .cliquewidth import (
    SearchBudgetExceeded,
    build_bounded_expr,
    eval_expression,
    exact_cw,
    format_term,
    parse_term,
    width,
)
from .classifier import classify, classify_all
from . import formats
from .formats import FormatError

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3


class InputError(Exception):
    pass


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    try:
        return formats.parse_edgelist(text)
    except FormatError as e:
        raise InputError(f"{path}: {e}") from e


def _emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "edgelist":
        return formats.emit_edgelist(g)
    if fmt == "graph6":
        return formats.emit_graph6(g) + "\n"
    if fmt == "dot":
        return formats.emit_dot(g)
    raise InputError(f"unknown format {fmt!r}")


def _cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    params = args.params
    seed = args.seed

    def want(k: int):
        if len(params) != k:
            raise InputError(f"{family} takes {k} parameter(s)")
        try:
            return [int(p) for p in params]
        except ValueError:
            raise InputError(f"parameters must be integers: {params}") from None

    try:
        if family == "path":
            g = gen.path(*want(1))
        elif family == "cycle":
            g = gen.cycle(*want(1))
        elif family == "complete":
            g = gen.complete(*want(1))
        elif family == "grid":
            g = gen.grid(*want(2))
        elif family == "wall":
            g = gen.wall(*want(1))
        elif family == "multipartite":
            if not params:
                raise InputError("multipartite takes part sizes")
            g = gen.complete_multipartite([int(p) for p in params])
        elif family == "named":
            if len(params) != 1:
                raise InputError("named takes one graph name")
            g = gen.named(params[0])
        elif family == "random-cograph":
            g = gen.random_cograph(*want(1), seed=seed)
        elif family == "random-block-cactus":
            g = gen.random_block_cactus(*want(1), seed=seed)
        else:
            raise InputError(f"unknown family {family!r}")
    except ValueError as e:
        raise InputError(str(e)) from e
    sys.stdout.write(_emit_graph(g, args.format))
    return EXIT_OK


def _pattern_graph(spec: str) -> Graph:
    try:
        return gen.named(spec)
    except ValueError:
        return _load_graph(spec)


def _cmd_detect(args: argparse.Namespace) -> int:
    host = _load_graph(args.host)
    pattern = _pattern_graph(args.pattern)
    if args.oracle:
        if host.n > ORACLE_MAX_VERTICES:
            print(f"oracle budget exceeded: host has {host.n} vertices", file=sys.stderr)
            return EXIT_BUDGET
        print("present" if contains_itm_oracle(host, pattern) else "absent")
        return EXIT_OK
    model = contains_itm(host, pattern)
    if model is None:
        print("absent")
        return EXIT_OK
    assert verify_model(host, pattern, model)
    print("present")
    payload = {
        "branch_map": {str(k): v for k, v in sorted(model.branch_map.items())},
        "edge_paths": {
            f"{u},{v}": list(p) for (u, v), p in sorted(model.edge_paths.items())
        },
    }
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


_RECOGNIZERS = {
    "tree": rec.is_tree,
    "cycle": rec.is_cycle_graph,
    "cmultipartite": rec.is_complete_multipartite,
    "cograph": rec.is_cograph,
    "block-cactus": rec.is_block_cactus,
    "paw-itm-free": rec.recognize_paw_itm_free,
    "diamond-itm-free": rec.is_block_cactus,
    "k4dc-free": lambda g: rec.is_forbidden_free(
        g, [gen.named("K4"), gen.named("diamond"), gen.named("claw")]
    ),
    "subcubic-triangle-free": rec.is_subcubic_triangle_free,
}


def _cmd_recognize(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    print("true" if _RECOGNIZERS[args.cls](g) else "false")
    return EXIT_OK


def _cmd_cw_build(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    route = {"p4": "p4-route", "paw": "paw-route", "diamond": "diamond-route"}[args.route]
    try:
        expr = build_bounded_expr(g, route)
    except ValueError as e:
        raise InputError(str(e)) from e
    print(format_term(expr))
    return EXIT_OK


def _cmd_cw_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        with open(args.expr, "r", encoding="ascii") as fh:
            expr = parse_term(fh.read())
    except OSError as e:
        raise InputError(str(e)) from e
    except ValueError as e:
        raise InputError(f"{args.expr}: {e}") from e
    built = eval_expression(expr).graph
    if is_isomorphic(built, g):
        print(f"valid width={width(expr)}")
    else:
        print("invalid")
    return EXIT_OK


def _cmd_cw_exact(args: argparse.Namespace) -> int:
    g = _load_graph(args.file)
    try:
        result = exact_cw(g, k_max=args.kmax)
    except SearchBudgetExceeded as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        raise InputError(str(e)) from e
    if result is None:
        print(f"cw > {args.kmax}")
    else:
        k, cert = result
        print(f"cw = {k}")
        print(format_term(cert))
    return EXIT_OK


def _verdict_line(v) -> str:
    if v.bounded:
        return f"bounded route={v.route} bound={v.bound}"
    witness = v.witness_family if v.witness_family else "none"
    return f"unbounded justification={v.justification} witness={witness}"


def _cmd_classify(args: argparse.Namespace) -> int:
    if args.all is not None:
        try:
            rows = classify_all(args.all)
        except ValueError as e:
            raise InputError(str(e)) from e
        for g, v in rows:
            print(f"{formats.emit_graph6(g)}\t{_verdict_line(v)}")
        return EXIT_OK
    if args.named is not None:
        h = gen.named(args.named) if args.named else None
        if h is None:
            raise InputError("empty graph name")
    elif args.file is not None:
        h = _load_graph(args.file)
    else:
        raise InputError("classify needs --named, --all, or a FILE")
    print(_verdict_line(classify(h)))
    return EXIT_OK


def _cmd_verify_lemmas(args: argparse.Namespace) -> int:
    n = args.n
    if not 1 <= n <= 6:
        raise InputError("verify-lemmas budget is 1 <= n <= 6")
    paw = gen.named("paw")
    diamond = gen.named("diamond")
    results = []
    for size in range(1, n + 1):
        paw_bad = diamond_bad = 0
        total = 0
        for g in gen.all_graphs(size):
            total += 1
            if rec.recognize_paw_itm_free(g) != (not contains_itm_oracle(g, paw)):
                paw_bad += 1
            if rec.is_block_cactus(g) != (not contains_itm_oracle(g, diamond)):
                diamond_bad += 1
        results.append((size, total, paw_bad, diamond_bad))
    for size, total, paw_bad, diamond_bad in results:
        print(
            f"n={size} graphs={total} "
            f"paw-lemma={'PASS' if paw_bad == 0 else f'FAIL({paw_bad})'} "
            f"diamond-lemma={'PASS' if diamond_bad == 0 else f'FAIL({diamond_bad})'}"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="itmcw",
        description="Induced topological minors, structured recognizers, and "
        "clique-width certificates.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="emit a generator output")
    g.add_argument("family")
    g.add_argument("params", nargs="*")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--format", choices=["edgelist", "graph6", "dot"], default="edgelist")
    g.set_defaults(func=_cmd_gen)

    d = sub.add_parser("detect", help="induced topological minor detection")
    d.add_argument("--host", required=True)
    d.add_argument("--pattern", required=True, help="named graph or edgelist file")
    d.add_argument("--oracle", action="store_true")
    d.set_defaults(func=_cmd_detect)

    r = sub.add_parser("recognize", help="structural class recognizers")
    r.add_argument("--class", dest="cls", required=True, choices=sorted(_RECOGNIZERS))
    r.add_argument("file")
    r.set_defaults(func=_cmd_recognize)

    cw = sub.add_parser("cw", help="clique-width expressions")
    cwsub = cw.add_subparsers(dest="cw_command", required=True)
    b = cwsub.add_parser("build")
    b.add_argument("--route", required=True, choices=["p4", "paw", "diamond"])
    b.add_argument("file")
    b.set_defaults(func=_cmd_cw_build)
    v = cwsub.add_parser("verify")
    v.add_argument("--graph", required=True)
    v.add_argument("--expr", required=True)
    v.set_defaults(func=_cmd_cw_verify)
    e = cwsub.add_parser("exact")
    e.add_argument("file")
    e.add_argument("--kmax", type=int, default=4)
    e.set_defaults(func=_cmd_cw_exact)

    c = sub.add_parser("classify", help="bounded/unbounded verdicts")
    c.add_argument("file", nargs="?")
    c.add_argument("--named")
    c.add_argument("--all", type=int)
    c.set_defaults(func=_cmd_classify)

    vl = sub.add_parser("verify-lemmas", help="exhaustive lemma equivalence suites")
    vl.add_argument("--n", type=int, required=True)
    vl.set_defaults(func=_cmd_verify_lemmas)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
