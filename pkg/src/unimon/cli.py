"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 validation or check failure
(witness printed when there is one), 3 search budget exhausted or
undecided.  All output is deterministic for identical input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .apery import apery, apery_maximal
from .classify import classify, enumerate_irreducible, enumerate_monoids, verify_theorems
from .errors import Infeasible, NotAnIdeal, NotClosed, UnimonError
from .frobenius import frobenius, pseudo_frobenius, special_gaps
from .ideals import (
    ideal_min_generators,
    oversemigroups,
    torsion_idempotents,
    torsion_monoid,
)
from .matrices import PatternGroup, UniMatrix
from .monoid import Monoid
from .orders import Order, count_n_g, interval
from .serialize import (
    MalformedInput,
    dumps,
    export_dot,
    group_from_json,
    ideal_from_json,
    matrix_from_json,
    matrix_to_json,
    monoid_from_json,
    monoid_to_json,
    report_to_json,
)

SIDE_NAMES = {
    "l": "left",
    "r": "right",
    "t": "twosided",
    "left": "left",
    "right": "right",
    "twosided": "twosided",
}


def _load_document(source):
    """A positional input is inline JSON when it looks like JSON, else a path."""
    text = source
    if not source.lstrip().startswith(("{", "[")):
        try:
            with open(source) as handle:
                text = handle.read()
        except OSError as err:
            raise MalformedInput(f"cannot read {source}: {err}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise MalformedInput(f"invalid JSON in {source}: {err}")


def _load_monoid(source):
    return monoid_from_json(_load_document(source))


def _parse_point(text, group):
    """A matrix argument: inline JSON or a bare entry vector like '1,0,2'."""
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as err:
            raise MalformedInput(f"invalid matrix JSON: {err}")
        return matrix_from_json(data, group)
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise MalformedInput(f"cannot parse {text!r} as an entry vector")
    positions = group.sorted_positions()
    if len(values) != len(positions):
        raise MalformedInput(
            f"expected {len(positions)} entries for {group.tag}({group.n})"
        )
    return UniMatrix.from_entries(group.n, dict(zip(positions, values)))


def _side(value):
    if value not in SIDE_NAMES:
        raise MalformedInput(f"unknown side {value!r}; use l, r, or t")
    return SIDE_NAMES[value]


def _emit(args, table_lines, payload):
    if args.format == "json":
        sys.stdout.write(dumps(payload))
    else:
        for line in table_lines:
            print(line)


def _set_label(group, points):
    return "{" + ",".join(group.label(p) for p in points) + "}"


def _cells(matrix):
    """Pattern-free label for error text, upper-triangle positions row-major."""
    return "(" + ",".join(str(v) for v in matrix.cells) + ")"


def cmd_validate(args):
    monoid = _load_monoid(args.source)
    r, conductor, genus, sporadicity, _ = monoid.invariants()
    _emit(
        args,
        [
            f"valid {monoid.group.tag}({monoid.group.n}) monoid: "
            f"genus {genus}, generating number {r}"
        ],
        {
            "valid": True,
            "group": {"pattern": monoid.group.tag, "n": monoid.group.n},
            "genus": genus,
            "generating_number": r,
            "conductor": conductor,
            "sporadicity": sporadicity,
        },
    )
    return 0


def cmd_gaps(args):
    monoid = _load_monoid(args.source)
    gaps = monoid.sorted_gaps()
    _emit(
        args,
        [_set_label(monoid.group, gaps)],
        {"gaps": [matrix_to_json(g, monoid.group) for g in gaps]},
    )
    return 0


def cmd_invariants(args):
    monoid = _load_monoid(args.source)
    r, conductor, genus, sporadicity, sporadics = monoid.invariants()
    _emit(
        args,
        [
            f"generating_number {r}",
            f"conductor {conductor}",
            f"genus {genus}",
            f"sporadicity {sporadicity}",
            f"sporadic_elements {_set_label(monoid.group, sporadics)}",
        ],
        {
            "generating_number": r,
            "conductor": conductor,
            "genus": genus,
            "sporadicity": sporadicity,
            "sporadic_elements": [
                matrix_to_json(p, monoid.group) for p in sporadics
            ],
        },
    )
    return 0


def cmd_mingens(args):
    monoid = _load_monoid(args.source)
    gens = monoid.minimal_generators
    _emit(
        args,
        [_set_label(monoid.group, gens)],
        {"minimal_generators": [matrix_to_json(g, monoid.group) for g in gens]},
    )
    return 0


def cmd_apery(args):
    monoid = _load_monoid(args.source)
    side = _side(args.side)
    pivot = _parse_point(args.pivot, monoid.group)
    ap = apery(monoid, pivot, side)
    bound = args.box
    if bound is None:
        bound = 2 * monoid.generating_number + pivot.max_entry()
    boxed = ap.in_box(bound)
    maxima = apery_maximal(monoid, pivot, side)
    group = monoid.group
    _emit(
        args,
        [
            f"core {_set_label(group, ap.core)}",
            f"boxed(<{bound}) {_set_label(group, boxed)}",
            f"maxima {_set_label(group, maxima)}",
        ],
        {
            "pivot": matrix_to_json(pivot, group),
            "side": side,
            "core": [matrix_to_json(p, group) for p in ap.core],
            "box_bound": bound,
            "boxed": [matrix_to_json(p, group) for p in boxed],
            "maxima": [matrix_to_json(p, group) for p in maxima],
        },
    )
    return 0


def _point_set_verb(args, compute, key):
    monoid = _load_monoid(args.source)
    points = compute(monoid)
    _emit(
        args,
        [_set_label(monoid.group, points)],
        {key: [matrix_to_json(p, monoid.group) for p in points]},
    )
    return 0


def cmd_frobenius(args):
    side = _side(args.side)
    return _point_set_verb(args, lambda m: frobenius(m, side), "frobenius")


def cmd_pf(args):
    side = _side(args.side)
    return _point_set_verb(args, lambda m: pseudo_frobenius(m, side), "pseudo_frobenius")


def cmd_special_gaps(args):
    return _point_set_verb(args, special_gaps, "special_gaps")


def cmd_order(args):
    monoid = _load_monoid(args.source)
    group = monoid.group
    kind = args.kind
    order = Order(kind, None if kind == "entrywise" else monoid)
    chosen = [bool(args.leq), bool(args.interval), bool(args.count_below)]
    if sum(chosen) != 1:
        raise MalformedInput("pick exactly one of --leq, --interval, --count-below")
    if args.leq:
        a, b = (_parse_point(t, group) for t in args.leq)
        value = order.leq(a, b)
        _emit(args, ["true" if value else "false"], {"leq": value})
        return 0
    if args.interval:
        low, high = (_parse_point(t, group) for t in args.interval)
        points = interval(order, low, high)
        _emit(
            args,
            [_set_label(group, points)],
            {"interval": [matrix_to_json(p, group) for p in points]},
        )
        return 0
    top = _parse_point(args.count_below, group)
    n_count, g_count = count_n_g(monoid, top, order)
    _emit(
        args,
        [f"n {n_count}", f"g {g_count}"],
        {"n": n_count, "g": g_count},
    )
    return 0


def cmd_ideal(args):
    ideal = ideal_from_json(_load_document(args.source))
    group = ideal.base.group
    if args.contains is not None:
        point = _parse_point(args.contains, group)
        value = ideal.contains(point)
        _emit(args, ["true" if value else "false"], {"contains": value})
        return 0
    if args.mingens:
        gens = ideal_min_generators(ideal, bound=args.box)
        _emit(
            args,
            [_set_label(group, gens)],
            {"min_generators": [matrix_to_json(p, group) for p in gens]},
        )
        return 0
    gap_part = ideal.gap_part()
    lines = [
        f"side {ideal.side}",
        f"cofinite {str(ideal.is_cofinite).lower()}",
        f"contains_base {str(ideal.contains_base()).lower()}",
        f"gap_part {_set_label(group, gap_part)}",
    ]
    _emit(
        args,
        lines,
        {
            "side": ideal.side,
            "cofinite": ideal.is_cofinite,
            "contains_base": ideal.contains_base(),
            "gap_part": [matrix_to_json(p, group) for p in gap_part],
        },
    )
    return 0


def cmd_torsion(args):
    monoid = _load_monoid(args.source)
    group = monoid.group

    def part_label(node):
        return _set_label(group, node.gap_part())

    if args.idempotents or args.dot:
        lattice = torsion_idempotents(monoid)
        if args.dot:
            with open(args.dot, "w") as handle:
                handle.write(export_dot(lattice))
        if not args.idempotents:
            print(f"wrote {args.dot}")
            return 0
        edges = list(lattice.hasse_edges)
        lines = [f"{len(lattice.nodes)} idempotents"]
        lines += [part_label(node) for node in lattice.nodes]
        lines += [f"cover t{i} -> t{j}" for i, j in edges]
        lines += [
            "minimal nontrivial: "
            + ", ".join(f"t{i}" for i in lattice.minimal_nontrivial)
        ]
        if args.dot:
            lines.append(f"wrote {args.dot}")
        _emit(
            args,
            lines,
            {
                "idempotents": [
                    [matrix_to_json(p, group) for p in node.gap_part()]
                    for node in lattice.nodes
                ],
                "hasse_edges": [list(e) for e in edges],
                "minimal_nontrivial": list(lattice.minimal_nontrivial),
            },
        )
        return 0
    elements = torsion_monoid(monoid)
    _emit(
        args,
        [f"{len(elements)} torsion elements"]
        + [part_label(node) for node in elements],
        {
            "torsion_elements": [
                [matrix_to_json(p, group) for p in node.gap_part()]
                for node in elements
            ]
        },
    )
    return 0


def cmd_oversemigroups(args):
    monoid = _load_monoid(args.source)
    bigger = oversemigroups(monoid)
    _emit(
        args,
        [f"{len(bigger)} oversemigroups"]
        + [_set_label(monoid.group, t.sorted_gaps()) for t in bigger],
        {"oversemigroups": [monoid_to_json(t) for t in bigger]},
    )
    return 0


def cmd_classify(args):
    monoid = _load_monoid(args.source)
    report = classify(monoid)
    data = report.frobenius
    group = monoid.group
    lines = [
        f"genus {report.genus}, generating number {report.generating_number}",
        f"F_l {_set_label(group, data.f_left)}",
        f"F_r {_set_label(group, data.f_right)}",
        f"F_t {_set_label(group, data.f_twosided)}",
        f"PF_l {_set_label(group, data.pf_left)}",
        f"PF_r {_set_label(group, data.pf_right)}",
        f"PF_t {_set_label(group, data.pf_twosided)}",
        f"special {_set_label(group, data.special)}",
        f"types {data.types}",
        f"irreducible {str(report.irreducible).lower()}",
        f"symmetry {report.symmetry}" + (" (strong)" if report.strong else ""),
    ]
    if report.pseudo_witness is not None:
        lines.append(f"pseudo witness {group.label(report.pseudo_witness)}")
    if report.witness is not None:
        first, second = report.witness
        lines.append(
            "reducible: meets of "
            + _set_label(group, first.sorted_gaps())
            + " and "
            + _set_label(group, second.sorted_gaps())
        )
    if report.counts is not None:
        lines.append(f"counts below Frobenius {report.counts}")
    _emit(args, lines, report_to_json(report))
    return 0


def cmd_verify(args):
    monoid = _load_monoid(args.source)
    checks = verify_theorems(monoid)
    failed = [name for name, c in checks.items() if c["status"] == "FAIL"]
    _emit(
        args,
        [f"{name}: {c['status']}  {c['detail']}" for name, c in checks.items()],
        checks,
    )
    return 2 if failed else 0


def _parse_pattern(pattern, n):
    if pattern == "full":
        return PatternGroup.full(n)
    if pattern == "first_row":
        return PatternGroup.first_row(n)
    try:
        positions = json.loads(pattern)
    except json.JSONDecodeError:
        raise MalformedInput(f"unknown pattern {pattern!r}")
    return group_from_json({"n": n, "pattern": positions})


def cmd_enumerate(args):
    group = _parse_pattern(args.pattern, args.n)
    if args.irreducible_only:
        found = enumerate_irreducible(group, args.genus)
    else:
        found = enumerate_monoids(group, args.genus)
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        for monoid in found:
            if monoid.gaps:
                payload = {
                    "monoid": monoid_to_json(monoid),
                    "report": report_to_json(classify(monoid)),
                }
            else:
                # The gap-free monoid has no Frobenius data to report.
                payload = {"monoid": monoid_to_json(monoid), "report": None}
            out.write(json.dumps(payload) + "\n")
    finally:
        if args.out:
            out.close()
    if args.out:
        print(f"wrote {len(found)} monoids to {args.out}")
    return 0


def cmd_report(args):
    monoid = _load_monoid(args.source)
    from . import figures

    os.makedirs(args.out_dir, exist_ok=True)
    report = classify(monoid)
    lattice = torsion_idempotents(monoid)
    written = []

    path = os.path.join(args.out_dir, "report.json")
    with open(path, "w") as handle:
        handle.write(dumps(report_to_json(report)))
    written.append(path)

    written.append(
        figures.write_report_csv(report, os.path.join(args.out_dir, "report.csv"))
    )
    written.append(
        figures.save_hasse(lattice, os.path.join(args.out_dir, "hasse.png"))
    )
    path = os.path.join(args.out_dir, "idempotents.dot")
    with open(path, "w") as handle:
        handle.write(export_dot(lattice))
    written.append(path)

    if len(monoid.group.sorted_positions()) == 2:
        written.append(
            figures.save_gap_grid(
                monoid, os.path.join(args.out_dir, "gap_grid.png")
            )
        )
    for path in written:
        print(f"wrote {path}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="unimon",
        description="Exact computations with unipotent numerical monoids.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        p.add_argument(
            "--format", choices=("json", "table"), default="table",
            help="output style",
        )
        return p

    def add_source(p):
        p.add_argument("source", help="path to a JSON file, or inline JSON")

    p = add("validate", cmd_validate, help="check a monoid document")
    add_source(p)

    for name, handler, doc in (
        ("gaps", cmd_gaps, "sorted gap set"),
        ("invariants", cmd_invariants, "generating number, conductor, genus, sporadics"),
        ("mingens", cmd_mingens, "minimal generators"),
        ("special-gaps", cmd_special_gaps, "special gaps"),
        ("oversemigroups", cmd_oversemigroups, "all monoids above this one"),
        ("classify", cmd_classify, "full classification report"),
        ("verify", cmd_verify, "run the theorem checks"),
    ):
        p = add(name, handler, help=doc)
        add_source(p)

    for name, handler in (("frobenius", cmd_frobenius), ("pf", cmd_pf)):
        p = add(name, handler, help=f"{name} set of a monoid")
        add_source(p)
        p.add_argument("--side", default="t", help="l, r, or t")

    p = add("apery", cmd_apery, help="Apery core, boxed slice, and maxima")
    add_source(p)
    p.add_argument("--pivot", required=True, help="pivot matrix (JSON or entry vector)")
    p.add_argument("--side", default="t", help="l, r, or t")
    p.add_argument("--box", type=int, default=None, help="bound for the boxed slice")

    p = add("order", cmd_order, help="order queries against a monoid")
    add_source(p)
    p.add_argument(
        "--kind",
        choices=("left", "right", "twosided", "entrywise"),
        required=True,
    )
    p.add_argument("--leq", nargs=2, metavar=("A", "B"), help="compare two points")
    p.add_argument("--interval", nargs=2, metavar=("LOW", "HIGH"))
    p.add_argument("--count-below", metavar="TOP", help="(n, g) counts below a point")

    p = add("ideal", cmd_ideal, help="inspect a relative ideal document")
    add_source(p)
    p.add_argument("--contains", metavar="POINT", help="membership query")
    p.add_argument("--mingens", action="store_true", help="minimal generators")
    p.add_argument("--box", type=int, default=None, help="bound for lazy ideals")

    p = add("torsion", cmd_torsion, help="torsion monoid or its idempotent lattice")
    add_source(p)
    p.add_argument("--idempotents", action="store_true")
    p.add_argument("--dot", metavar="FILE", help="write the lattice as DOT")

    p = add("enumerate", cmd_enumerate, help="all monoids of one genus")
    p.add_argument("--pattern", default="full", help="full, first_row, or positions JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--irreducible-only", action="store_true")
    p.add_argument("--out", metavar="FILE.jsonl", help="write JSON lines here")

    p = add("report", cmd_report, help="write JSON, CSV, DOT, and figures")
    add_source(p)
    p.add_argument("--out-dir", required=True)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except MalformedInput as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except Infeasible as err:
        print(f"infeasible: {err}", file=sys.stderr)
        return 3
    except NotClosed as err:
        left, right, product = (
            _cells(err.left), _cells(err.right), _cells(err.product)
        )
        print(
            f"validation failed: witness {left} * {right} = {product}",
            file=sys.stderr,
        )
        return 2
    except NotAnIdeal as err:
        print(
            "validation failed: witness "
            f"{_cells(err.element)} * {_cells(err.factor)} escapes at "
            f"{_cells(err.product)}",
            file=sys.stderr,
        )
        return 2
    except UnimonError as err:
        print(f"validation failed: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
